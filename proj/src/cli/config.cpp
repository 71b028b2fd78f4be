#include "qrabi/cli/config.hpp"

#include "qrabi/errors.hpp"
#include "qrabi/spectra.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <sstream>

namespace qrabi::cli {

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t\"");
        const auto e = item.find_last_not_of(" \t\"");
        if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

std::string join_formats(const std::vector<Format>& formats) {
    std::string s;
    for (std::size_t i = 0; i < formats.size(); ++i) {
        if (i) s += ',';
        s += to_string(formats[i]);
    }
    return s;
}

}  // namespace

std::string to_string(Command c) {
    switch (c) {
        case Command::spectrum: return "spectrum";
        case Command::wigner: return "wigner";
        case Command::entropy: return "entropy";
        case Command::crossings: return "crossings";
        case Command::reproduce_paper: return "reproduce-paper";
    }
    return "?";
}

std::string to_string(Format f) {
    switch (f) {
        case Format::csv: return "csv";
        case Format::json: return "json";
        case Format::svg: return "svg";
        case Format::gnuplot: return "gnuplot";
    }
    return "?";
}

Command parse_command(const std::string& s) {
    for (Command c : {Command::spectrum, Command::wigner, Command::entropy, Command::crossings,
                      Command::reproduce_paper}) {
        if (to_string(c) == s) return c;
    }
    throw ConfigError("unknown command '" + s + "'");
}

Format parse_format(const std::string& s) {
    for (Format f : {Format::csv, Format::json, Format::svg, Format::gnuplot}) {
        if (to_string(f) == s) return f;
    }
    throw ConfigError("unknown output format '" + s + "'");
}

void ExperimentSpec::validate() const {
    model().validate();
    if (g_steps < 1) throw ConfigError("g-steps must be >= 1");
    if (g_steps > 1 && !(g_max > g_min)) throw ConfigError("g-max must exceed g-min");
    if (g_min < 0.0) throw ConfigError("g-min must be >= 0");
    if (g < 0.0) throw ConfigError("g must be >= 0");
    if (levels < 0 || levels > 2 * n_max) {
        throw ConfigError("levels must lie in [0, 2*nmax]");
    }
    if (command == Command::crossings && resolved_levels() < 2) {
        throw ConfigError("crossings needs at least 2 levels");
    }
    if (command == Command::crossings && g_steps < 3) {
        throw ConfigError("crossings needs at least 3 grid points");
    }
    if (!(grid_extent > 0.0)) throw ConfigError("grid-extent must be > 0");
    if (grid_points < 2) throw ConfigError("grid-points must be >= 2");
    if (formats.empty()) throw ConfigError("at least one output format is required");
    if (out_dir.empty()) throw ConfigError("output directory must not be empty");
}

ModelConfig ExperimentSpec::model() const {
    if (n_max < 2) throw ConfigError("nmax must be >= 2");
    ModelConfig cfg;
    cfg.omega_c = omega_c;
    cfg.omega_0 = omega_0;
    cfg.g = g;
    cfg.include_diamagnetic = diamagnetic;
    cfg.d_override = d_override;
    cfg.trunc = FockTruncation(n_max);
    return cfg;
}

std::vector<double> ExperimentSpec::g_grid() const {
    return uniform_grid(g_min, g_max, g_steps);
}

QuadratureGrid ExperimentSpec::quadrature_grid() const {
    return QuadratureGrid::square(grid_extent, grid_points);
}

int ExperimentSpec::resolved_levels() const {
    if (levels > 0) return levels;
    return command == Command::crossings ? std::min(8, 2 * n_max) : 2 * n_max;
}

nlohmann::ordered_json ExperimentSpec::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = to_string(command);
    j["omega_c"] = omega_c;
    j["omega0"] = omega_0;
    j["nmax"] = n_max;
    j["diamagnetic"] = diamagnetic ? "on" : "off";
    j["d_override"] = d_override ? nlohmann::ordered_json(*d_override) : nlohmann::ordered_json(nullptr);
    j["g_min"] = g_min;
    j["g_max"] = g_max;
    j["g_steps"] = g_steps;
    j["levels"] = resolved_levels();
    j["g"] = g;
    j["grid_extent"] = grid_extent;
    j["grid_points"] = grid_points;
    j["out"] = out_dir.generic_string();
    j["format"] = join_formats(formats);
    j["threads"] = threads;
    return j;
}

std::optional<ExperimentSpec> parse_command_line(int argc, const char* const* argv) {
    ExperimentSpec spec;
    std::string command;
    std::string diamagnetic = "off";
    std::vector<std::string> formats;
    for (Format f : spec.formats) formats.push_back(to_string(f));
    std::string out_dir = spec.out_dir.string();
    double d_override = -1.0;

    CLI::App app{"Quantum Rabi model with and without the diamagnetic A^2 term: spectra, "
                 "ground-state Wigner functions and qubit-field entanglement.\n"
                 "All frequencies are in units of the cavity frequency (hbar = 1)."};
    app.set_config("--config", "", "Read key = value defaults from FILE (keys are long option names)");
    app.add_option("command", command, "spectrum | wigner | entropy | crossings | reproduce-paper")->required();
    app.add_option("--omega-c", spec.omega_c, "Cavity frequency")->capture_default_str();
    app.add_option("--omega0", spec.omega_0, "Qubit transition frequency")->capture_default_str();
    app.add_option("--nmax", spec.n_max, "Number of retained Fock states")->capture_default_str();
    app.add_option("--diamagnetic", diamagnetic, "Include the A^2 term: on | off")->capture_default_str();
    app.add_option("--d-override", d_override, "Explicit diamagnetic constant D (default g^2/omega_c)");
    app.add_option("--g-min", spec.g_min, "Sweep start")->capture_default_str();
    app.add_option("--g-max", spec.g_max, "Sweep end")->capture_default_str();
    app.add_option("--g-steps", spec.g_steps, "Sweep points, endpoints included")->capture_default_str();
    app.add_option("--levels", spec.levels, "Levels per grid point (0: all for spectrum, 8 for crossings)")
        ->capture_default_str();
    app.add_option("--g", spec.g, "Coupling for the wigner command")->capture_default_str();
    app.add_option("--grid-extent", spec.grid_extent, "Wigner grid covers [-E, E] in q and p")
        ->capture_default_str();
    app.add_option("--grid-points", spec.grid_points, "Wigner grid points per axis")->capture_default_str();
    app.add_option("--out", out_dir, "Output directory")->capture_default_str();
    // A vector so that config files may give the list unquoted (CLI11 splits it).
    app.add_option("--format", formats, "Comma-separated subset of csv,json,svg,gnuplot")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--threads", spec.threads, "Worker threads (0: hardware parallelism)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    spec.command = parse_command(command);
    if (diamagnetic == "on") {
        spec.diamagnetic = true;
    } else if (diamagnetic == "off") {
        spec.diamagnetic = false;
    } else {
        throw ConfigError("--diamagnetic expects on or off, got '" + diamagnetic + "'");
    }
    if (app.count("--d-override") > 0) spec.d_override = d_override;
    spec.out_dir = out_dir;
    spec.formats.clear();
    for (const auto& raw : formats)
        for (const auto& f : split_list(raw)) spec.formats.push_back(parse_format(f));

    spec.validate();
    return spec;
}

}  // namespace qrabi::cli
