// config.hpp — run configuration: INI-style sectioned key-value text,
// override handling, and the resolved, typed RunConfig.

#pragma once

#include "bosense/network.hpp"
#include "bosense/scenarios.hpp"
#include "bosense/stochastic.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bosense {

// Raw parsed document. Keys may repeat within a section (mode, mu, amplitude
// lines); lookup helpers return the last value or all values in file order.
struct ConfigDoc {
    struct Entry {
        std::string section;  // "" for the top level
        std::string key;
        std::string value;
    };
    std::vector<Entry> entries;

    static ConfigDoc parse_text(const std::string& text);
    static ConfigDoc parse_file(const std::string& path);

    // "section.key=value" override; replaces the last occurrence or appends.
    void set(const std::string& dotted_key, const std::string& value);

    std::optional<std::string> get(const std::string& section,
                                   const std::string& key) const;
    std::vector<std::string> get_all(const std::string& section,
                                     const std::string& key) const;

    // Sorted canonical "section.key = value" dump (repeated keys keep order).
    std::string canonical() const;
};

enum class Command { Analyze, Sweep, Simulate, Phase, Verify };

const char* command_name(Command c);

struct OutputSpec {
    std::string dir = "out";
    bool json_mirror = false;  // format = json adds report.json
};

struct MeasurementSpec {
    double tau = 0.0;
    int port = 0;
    Target target = FrequencyShift{0};
    double perturbation = 0.0;  // delta for SNR-style outputs
    double phase = 0.0;
};

struct SweepSpec {
    std::string parameter;
    std::vector<double> grid;
};

struct PhaseSpec {
    double kappa = 1.0;
    double kappa_ex = 0.0;
    double n_photons = 1.0;
    double tau = 1.0;
    long trials = 1000;
    std::uint64_t seed = 0;
};

struct VerifySpec {
    int instances = 500;
    std::uint64_t seed = 1;
};

// Fully resolved run description. Exactly one of preset_name / inline
// network+drive is populated.
struct RunConfig {
    Command command = Command::Analyze;

    std::string preset_name;       // empty when the network is inline
    PresetParams preset_params;
    std::vector<Mode> modes;       // inline network
    Eigen::MatrixXcd mu;
    double w_in = 0.0;             // inline drive
    Eigen::VectorXcd amplitudes;

    MeasurementSpec measurement;
    SimConfig sim;
    SweepSpec sweep;
    PhaseSpec phase;
    VerifySpec verify;
    OutputSpec output;

    std::string canonical;  // config text the run resolved from
    std::uint64_t digest = 0;

    bool has_preset() const { return !preset_name.empty(); }
    // Builds the network and drive (from the preset or the inline sections).
    std::pair<Network, Drive> instantiate() const;
};

// Validates sections and keys against the schema of cfg.command.
RunConfig resolve_config(const ConfigDoc& doc);

// Lossless (17 significant digits) config text for a preset instance, able to
// round-trip through parse_text + resolve_config.
std::string preset_to_config_text(const Preset& p, const MeasurementSpec& m);

// Shared scalar parsing helpers (strict: the whole token must convert).
double parse_double(const std::string& text, const std::string& context);
long parse_long(const std::string& text, const std::string& context);
std::uint64_t parse_u64(const std::string& text, const std::string& context);
Target parse_target(const std::string& text);
std::string target_to_string(const Target& target);

// FNV-1a over the canonical config text.
std::uint64_t config_digest(const std::string& canonical_text);

} // namespace bosense
