// config.hpp: resolved experiment description for the command-line tool

#pragma once

#include "qrabi/model.hpp"
#include "qrabi/phasespace.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace qrabi::cli {

enum class Command { spectrum, wigner, entropy, crossings, reproduce_paper };
enum class Format { csv, json, svg, gnuplot };

std::string to_string(Command c);
std::string to_string(Format f);
Command parse_command(const std::string& s);
Format parse_format(const std::string& s);

struct ExperimentSpec {
    Command command{Command::spectrum};

    // Physical parameters, ω_c units.
    double omega_c{1.0};
    double omega_0{1.0};
    int n_max{15};
    bool diamagnetic{false};
    std::optional<double> d_override{};

    // Coupling sweep.
    double g_min{0.0};
    double g_max{3.0};
    int g_steps{201};
    // Levels written per grid point; 0 means all 2·n_max (spectrum) or 8 (crossings).
    int levels{0};

    // Single coupling used by the wigner command.
    double g{0.0};
    double grid_extent{6.0};
    int grid_points{201};

    std::filesystem::path out_dir{"results"};
    std::vector<Format> formats{Format::csv, Format::json};
    int threads{0};

    void validate() const;

    ModelConfig model() const;
    std::vector<double> g_grid() const;
    QuadratureGrid quadrature_grid() const;
    int resolved_levels() const;

    // Every field, defaults included.
    nlohmann::ordered_json to_json() const;
};

// Parses `<tool> COMMAND [options]`. A --config file supplies key = value
// defaults (keys are the long option names); explicit flags win over it.
// Throws ConfigError on malformed input. Returns std::nullopt after printing
// --help.
std::optional<ExperimentSpec> parse_command_line(int argc, const char* const* argv);

}  // namespace qrabi::cli
