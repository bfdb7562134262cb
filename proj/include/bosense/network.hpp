// network.hpp — n-mode linear bosonic sensor networks and their effective
// non-Hermitian Hamiltonian: construction, validation, stability diagnosis.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <variant>
#include <vector>

namespace bosense {

using Complex = std::complex<double>;

// Per-mode physical rates. All quantities share one user-chosen rate unit
// (hbar = 1, photon number dimensionless).
struct Mode {
    double w0 = 0.0;        // resonance angular frequency
    double kappa_ex = 0.0;  // coupling (port) loss rate
    double kappa_0 = 0.0;   // intrinsic loss rate
    double gain = 0.0;      // linear gain rate

    double kappa() const { return kappa_ex + kappa_0; }
    // Diagonal Hamiltonian entry w0 - i(kappa - g)/2.
    Complex diagonal() const { return {w0, -0.5 * (kappa() - gain)}; }
};

// Immutable after build_network; safe to share across threads.
struct Network {
    std::vector<Mode> modes;
    Eigen::MatrixXcd coupling;     // mu, exact zeros on the diagonal
    Eigen::MatrixXcd hamiltonian;  // effective non-Hermitian H
    bool reciprocal = false;       // mu == mu^dagger within 1e-12 relative

    int size() const { return static_cast<int>(modes.size()); }
};

struct StabilityReport {
    Eigen::VectorXcd eigenvalues;  // eigenvalues of -iH
    double decay_margin = 0.0;     // min over eigenvalues of -Re(lambda)
    double epsilon = 0.0;          // threshold used for the verdict
    bool below_threshold = false;  // decay_margin > epsilon
};

// Parameter perturbations a sensing run can target.
struct FrequencyShift {
    int mode = 0;  // w0 of this mode shifts
};
struct CouplingShift {
    int i = 0;  // delta is added to both mu(i,j) and mu(j,i)
    int j = 1;
};
using Target = std::variant<FrequencyShift, CouplingShift>;

// Validates rates and shape, zeroes the diagonal of mu, computes H and the
// reciprocity flag. Throws ValidationError on bad input.
Network build_network(std::vector<Mode> modes, Eigen::MatrixXcd mu);

// Convenience: n-mode network with no couplings.
Network build_network(std::vector<Mode> modes);

const Eigen::MatrixXcd& effective_hamiltonian(const Network& net);

// chi(w) = wI - H.
Eigen::MatrixXcd chi(const Network& net, double w);

// Eigenvalue decay diagnosis of -iH. Throws PhysicsError if the eigensolver
// fails to converge.
StabilityReport stability(const Network& net);

// max over modes of (kappa_i + g_i + sum_j |mu_ij|); sets the relative scale
// for the stability epsilon and the integrator step cap.
double rate_scale(const Network& net);

// Returns a copy of net with the target parameter shifted by delta.
Network apply_perturbation(const Network& net, const Target& target, double delta);

// Validated index helpers (throw ValidationError when out of range).
void check_mode_index(const Network& net, int k, const char* what);
void check_pair(const Network& net, int i, int j);

} // namespace bosense
