// verify.hpp — randomized bound suite: samples stable networks, drives and
// probe ports, and checks every sensing limit against its fundamental bound.

#pragma once

#include "bosense/analytic.hpp"
#include "bosense/network.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bosense {

struct VerifyOptions {
    int instances = 500;
    std::uint64_t seed = 1;
    int max_modes = 8;
    bool frequency = true;  // frequency-shift targets
    bool coupling = true;   // coupling-shift targets (n >= 2 instances)
};

struct VerifyRow {
    int instance = 0;
    int n_modes = 0;
    std::string target;  // "frequency:k" or "coupling:i,j"
    int port = 0;
    double tau = 0.0;
    double limit = 0.0;
    double bound = 0.0;
    double margin = 0.0;
    bool pass = false;  // margin >= -1e-9 * bound
};

struct VerifySummary {
    int checked = 0;
    int violations = 0;
    int redraws = 0;  // instances resampled for instability/degeneracy
    std::vector<VerifyRow> rows;
};

// Deterministic in (options); instance k depends only on (seed, k).
VerifySummary run_bound_suite(const VerifyOptions& options);

// The instance generator, exposed for property tests. Returns a stable,
// well-conditioned network with its drive, probe port, frequency target and
// measurement time; attempts counts rejected draws.
struct RandomInstance {
    Network network;
    Drive drive;
    int port = 0;
    int target_mode = 0;
    double tau = 0.0;
    int attempts = 0;
};

RandomInstance random_instance(std::uint64_t seed, int index, int max_modes = 8);

} // namespace bosense
