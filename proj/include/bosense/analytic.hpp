// analytic.hpp — closed-form engine: steady states, cofactor perturbation
// responses, channel-wise output noise spectral densities, homodyne SNR,
// sensing limits and their fundamental bounds.

#pragma once

#include "bosense/network.hpp"

#include <string>
#include <vector>

namespace bosense {

// Coherent drive: carrier frequency plus one mean input amplitude per port.
struct Drive {
    double w_in = 0.0;
    Eigen::VectorXcd amplitudes;
};

// Validates that at least one amplitude is nonzero.
Drive make_drive(double w_in, Eigen::VectorXcd amplitudes);

struct SteadyState {
    Eigen::VectorXcd a;        // mean intracavity amplitudes
    Eigen::VectorXd photons;   // n_i = |a_i|^2
    Eigen::VectorXcd a_out;    // a_out,i = a_in,i - sqrt(kappa_ex,i) a_i
};

// Derivative of every port output with respect to the perturbation parameter.
struct Response {
    Eigen::VectorXcd per_port;
};

struct ChannelTransfer {
    enum class Kind { Input, Intrinsic, Gain };
    Kind kind = Kind::Input;
    int mode = 0;
    double magnitude_sq = 0.0;  // |transfer|^2 into the probed port
};

const char* channel_kind_name(ChannelTransfer::Kind kind);

// Output noise spectral densities at one port and frequency. s_plus collects
// the input and intrinsic-loss channels, s_minus the gain channels.
struct NoisePair {
    double s_plus = 0.0;
    double s_minus = 0.0;
    std::vector<ChannelTransfer> channels;
};

struct SensingReport {
    int port = 0;
    double tau = 0.0;
    double response_mag = 0.0;  // |d a_out / d theta|
    double noise_std = 0.0;     // sqrt((s_plus + s_minus)/tau)
    double snr_coeff = 0.0;     // SNR per unit perturbation
    double limit = 0.0;         // perturbation at SNR = 1
    double bound = 0.0;         // fundamental floor for this target
    double margin = 0.0;        // limit - bound
};

struct CouplingOptimum {
    double kappa_ex = 0.0;
    double limit = 0.0;
};

// Solves chi(w_in) a = i sqrt(kappa_ex) a_in and applies the input-output
// relation. Requires a below-threshold network and a well-conditioned chi.
SteadyState steady_state(const Network& net, const Drive& drive);

// d a_out / d(Delta w) for a shift in mode k's resonance, via cofactors.
Response frequency_response(const Network& net, const Drive& drive, int k);

// d a_out / d(Delta mu) for a simultaneous shift of mu(i,j) and mu(j,i).
Response coupling_response(const Network& net, const Drive& drive, int i, int j);

Response response_for(const Network& net, const Drive& drive, const Target& target);

NoisePair output_noise_pair(const Network& net, int port, double w);

// s_plus - s_minus - 1. Diagnostic only; vanishes identically for reciprocal
// networks and may not for non-reciprocal ones.
double commutator_gap(const Network& net, int port, double w);

// SNR of a homodyne measurement of the perturbed output quadrature, with the
// local-oscillator phase optimized in closed form: 2|response delta| /
// sqrt((s_plus + s_minus)/tau). Requires tau >= 100/decay_margin.
double homodyne_snr(const Network& net, const Drive& drive, int port,
                    const Target& target, double tau, double delta);

// Same quantity at an explicit phase (no optimization).
double homodyne_snr_at_phase(const Network& net, const Drive& drive, int port,
                             const Target& target, double tau, double delta,
                             double phase);

// Full report: limit = noise_std/(2 response_mag), bound from
// fundamental_bound or coupling_limit_bound depending on the target.
SensingReport sensing_limit(const Network& net, const Drive& drive, int port,
                            const Target& target, double tau);

// sqrt(kappa_0)/(2 sqrt(n tau)).
double fundamental_bound(double kappa_0, double n_photons, double tau);

// 1 / ((2 sqrt(n2)/sqrt(kappa_01) + 2 sqrt(n1)/sqrt(kappa_02)) sqrt(tau)).
double coupling_limit_bound(double kappa_01, double kappa_02, double n1,
                            double n2, double tau);

// Corollary of the above at kappa_01 = kappa_02, n1 = n2:
// sqrt(kappa_0)/(4 sqrt(n tau)).
double symmetric_coupling_bound(double kappa_0, double n_photons, double tau);

// Sweeps kappa_ex of the target mode over the grid and returns the grid
// minimizer of the frequency sensing limit. When n_target > 0 the drive is
// rescaled at every grid point so the target mode holds n_target photons.
CouplingOptimum optimize_coupling(const Network& net, const Drive& drive,
                                  int port, int target_mode, double tau,
                                  const std::vector<double>& grid,
                                  double n_target = 0.0);

// Scales the drive so mode k holds n_target photons in steady state.
Drive normalize_drive(const Network& net, const Drive& drive, int k,
                      double n_target);

} // namespace bosense
