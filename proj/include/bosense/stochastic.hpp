// stochastic.hpp — Monte-Carlo oracle: Euler-Maruyama Langevin trajectories
// with white-noise channels, empirical homodyne statistics, and the
// above-threshold phase-diffusion (Schawlow-Townes) simulator.

#pragma once

#include "bosense/analytic.hpp"
#include "bosense/network.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bosense {

struct SimConfig {
    double dt = 1e-3;       // step; must satisfy dt <= 0.01/rate_scale
    double t_total = 0.0;   // trajectory length
    double burn_in = 0.0;   // discarded transient; >= 10/decay_margin
    int n_traj = 1;
    std::uint64_t seed = 0;
    double chunk = 0.0;     // output-integral chunk duration; 0 = auto
    bool with_noise = true; // false disables every noise channel
};

// Per-trajectory integrals of the output field over fixed chunks, for every
// port. Windows for homodyne estimates are assembled from whole chunks.
struct Ensemble {
    int n_traj = 0;
    int n_ports = 0;
    int n_chunks = 0;      // chunks per trajectory
    int burn_chunks = 0;   // chunks covered by the burn-in
    double chunk_dt = 0.0;
    double dt = 0.0;
    double decay_margin = 0.0;
    Eigen::VectorXcd mean_drive;            // a_in echo, for mean checks
    std::vector<Eigen::MatrixXcd> chunks;   // [traj](chunk, port)
    // Final intracavity amplitudes, for convergence checks.
    std::vector<Eigen::VectorXcd> final_state;
};

struct HomodyneEstimate {
    double mean = 0.0;
    double variance = 0.0;
    long n_samples = 0;
    double stderr_of_variance = 0.0;  // variance * sqrt(2/(n_samples-1))
};

struct McSnr {
    double snr = 0.0;           // |mean difference| / pooled std
    double analytic_snr = 0.0;  // homodyne_snr at the same parameters
    double phase = 0.0;         // local-oscillator phase used
    HomodyneEstimate base;
    HomodyneEstimate shifted;
};

struct PhaseDiffusionResult {
    double var_phase = 0.0;  // empirical Var[phi(t+tau) - phi(t)]
    double freq_std = 0.0;   // empirical std of phi(tau)/tau
    double delta_w = 0.0;    // theoretical linewidth kappa/(2n)
};

// Integrates d a = i chi(w_in) a dt + sqrt(kappa_ex) a_in dt + noise in the
// frame rotating at w_in. Each active channel (input, intrinsic, gain per
// mode) injects circular complex Gaussian increments with per-quadrature
// variance dt/4, the classical symmetric analog of unit shot noise; the
// input increments also enter the recorded output integrals directly.
// Trajectory t draws from a stream derived from (cfg.seed, t) only.
Ensemble simulate(const Network& net, const Drive& drive, const SimConfig& cfg);

// Convenience: simulate the perturbed network (same noise streams as the
// unperturbed one under the same cfg, enabling paired comparisons).
Ensemble simulate(const Network& net, const Drive& drive, const SimConfig& cfg,
                  const Target& target, double delta);

// Time-averaged quadrature Q = e^{i phase} a_out + c.c. over non-overlapping
// tau windows after burn-in, pooled across trajectories.
HomodyneEstimate homodyne_estimate(const Ensemble& ensemble, double phase,
                                   double tau, int port = 0);

// Paired ensembles at theta and theta+delta with common random numbers;
// empirical SNR against pooled window statistics.
McSnr mc_snr(const Network& net, const Drive& drive, const Target& target,
             double delta, const SimConfig& cfg, double tau, int port);

// Driftless Wiener phase with diffusion coefficient kappa/(2 n), the
// Schawlow-Townes linewidth; returns empirical statistics of phi(tau).
PhaseDiffusionResult phase_diffusion(double kappa, double kappa_ex,
                                     double n_photons, double tau, long trials,
                                     std::uint64_t seed, int steps = 256);

} // namespace bosense
