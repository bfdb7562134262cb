// network.cpp — network construction, validation and stability.

#include "bosense/network.hpp"

#include "bosense/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace bosense {

namespace {

void check_rates(const Mode& m, int index) {
    if (!(m.kappa_ex >= 0.0) || !(m.kappa_0 >= 0.0) || !(m.gain >= 0.0)) {
        throw ValidationError("mode " + std::to_string(index) +
                              ": rates kappa_ex, kappa_0, g must be >= 0");
    }
    if (!std::isfinite(m.w0) || !std::isfinite(m.kappa_ex) ||
        !std::isfinite(m.kappa_0) || !std::isfinite(m.gain)) {
        throw ValidationError("mode " + std::to_string(index) + ": non-finite parameter");
    }
}

bool is_hermitian(const Eigen::MatrixXcd& mu) {
    const double scale = mu.cwiseAbs().maxCoeff();
    const double tol = 1e-12 * scale;
    for (Eigen::Index i = 0; i < mu.rows(); ++i) {
        for (Eigen::Index j = 0; j < mu.cols(); ++j) {
            if (std::abs(mu(i, j) - std::conj(mu(j, i))) > tol) return false;
        }
    }
    return true;
}

} // namespace

Network build_network(std::vector<Mode> modes, Eigen::MatrixXcd mu) {
    const int n = static_cast<int>(modes.size());
    if (n == 0) throw ValidationError("network needs at least one mode");
    if (mu.rows() != n || mu.cols() != n) {
        throw ValidationError("coupling matrix must be " + std::to_string(n) + "x" +
                              std::to_string(n) + ", got " + std::to_string(mu.rows()) +
                              "x" + std::to_string(mu.cols()));
    }
    for (int i = 0; i < n; ++i) check_rates(modes[i], i);
    if (!mu.allFinite()) throw ValidationError("coupling matrix has non-finite entries");

    // Resonance shifts belong in w0; the diagonal is forced to zero.
    mu.diagonal().setZero();

    Network net;
    net.modes = std::move(modes);
    net.coupling = std::move(mu);
    net.reciprocal = is_hermitian(net.coupling);
    net.hamiltonian = net.coupling;
    for (int i = 0; i < n; ++i) net.hamiltonian(i, i) = net.modes[i].diagonal();
    return net;
}

Network build_network(std::vector<Mode> modes) {
    const auto n = static_cast<Eigen::Index>(modes.size());
    return build_network(std::move(modes), Eigen::MatrixXcd::Zero(n, n));
}

const Eigen::MatrixXcd& effective_hamiltonian(const Network& net) {
    return net.hamiltonian;
}

Eigen::MatrixXcd chi(const Network& net, double w) {
    Eigen::MatrixXcd x = -net.hamiltonian;
    x.diagonal().array() += w;
    return x;
}

double rate_scale(const Network& net) {
    double scale = 0.0;
    for (int i = 0; i < net.size(); ++i) {
        double row = net.modes[i].kappa() + net.modes[i].gain;
        for (int j = 0; j < net.size(); ++j) row += std::abs(net.coupling(i, j));
        scale = std::max(scale, row);
    }
    return scale;
}

StabilityReport stability(const Network& net) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(net.hamiltonian, false);
    if (solver.info() != Eigen::Success) {
        throw PhysicsError("stability: eigensolver failed to converge");
    }
    StabilityReport report;
    const Eigen::VectorXcd h = solver.eigenvalues();
    report.eigenvalues = Complex(0.0, -1.0) * h;  // eigenvalues of -iH
    report.decay_margin = (-report.eigenvalues.real().array()).minCoeff();
    report.epsilon = 1e-9 * rate_scale(net);
    report.below_threshold = report.decay_margin > report.epsilon;
    return report;
}

Network apply_perturbation(const Network& net, const Target& target, double delta) {
    std::vector<Mode> modes = net.modes;
    Eigen::MatrixXcd mu = net.coupling;
    if (const auto* f = std::get_if<FrequencyShift>(&target)) {
        check_mode_index(net, f->mode, "frequency target");
        modes[f->mode].w0 += delta;
    } else {
        const auto& c = std::get<CouplingShift>(target);
        check_pair(net, c.i, c.j);
        mu(c.i, c.j) += delta;
        mu(c.j, c.i) += delta;
    }
    return build_network(std::move(modes), std::move(mu));
}

void check_mode_index(const Network& net, int k, const char* what) {
    if (k < 0 || k >= net.size()) {
        throw ValidationError(std::string(what) + ": mode index " + std::to_string(k) +
                              " out of range for n = " + std::to_string(net.size()));
    }
}

void check_pair(const Network& net, int i, int j) {
    check_mode_index(net, i, "coupling target");
    check_mode_index(net, j, "coupling target");
    if (i == j) throw ValidationError("coupling target needs two distinct modes");
    if (net.size() < 2) throw ValidationError("coupling target needs n >= 2");
}

} // namespace bosense
