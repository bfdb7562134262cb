// scenarios.hpp — canonical network presets and sweep drivers.

#pragma once

#include "bosense/analytic.hpp"
#include "bosense/network.hpp"

#include <map>
#include <string>
#include <vector>

namespace bosense {

struct Preset {
    std::string name;
    Network network;
    Drive drive;
    std::string notes;
};

using PresetParams = std::map<std::string, double>;

// Known presets:
//   single_passive        kappa_0, kappa_ex, n_target, w0, detuning
//   single_active         + g
//   two_mode_ep           gamma, epsilon, gamma0, kappa_01, kappa_02, n_target
//   two_mode_nonreciprocal mu12, mu21, kappa_ex, kappa_0, n_target
//   chain                 n, coupling, kappa_ex, kappa_0, n_target
// Unknown names or parameters throw ValidationError; presets violating
// stability throw PhysicsError.
Preset preset(const std::string& name, const PresetParams& params = {});

std::vector<std::string> preset_names();

struct SweepRow {
    double value = 0.0;
    double limit = 0.0;
    double bound = 0.0;
    double margin = 0.0;
    double n_target_mode = 0.0;  // photons at the target mode
    bool ok = false;
    std::string reason;  // populated for skipped rows
};

// Rebuilds the preset at every grid value of `parameter` and evaluates the
// sensing limit; rows that fail stability or response preconditions are
// recorded as skipped, never thrown.
std::vector<SweepRow> sweep(const std::string& preset_name,
                            const PresetParams& base, const std::string& parameter,
                            const std::vector<double>& grid, double tau, int port,
                            const Target& target);

} // namespace bosense
