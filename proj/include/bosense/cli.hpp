// cli.hpp — batch front door: flag parsing, config dispatch, report emission.

#pragma once

#include "bosense/config.hpp"

#include <string>
#include <vector>

namespace bosense {

// Exit codes: 0 success, 2 validation error, 3 physics error, 4 bound
// violation found by verify, 1 unexpected failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUnexpected = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitPhysics = 3;
inline constexpr int kExitBoundViolation = 4;

// Runs a resolved config and writes its reports; returns the exit code and
// the list of files written. Pure of global state apart from the filesystem.
int run_config(const RunConfig& cfg, std::vector<std::string>* files_written = nullptr);

// argv-level entry: --config, --set, --seed, --out, --format.
int run_cli(int argc, const char* const* argv);

} // namespace bosense
