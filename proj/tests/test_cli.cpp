#include "doctest.h"

#include "qrabi/cli/config.hpp"
#include "qrabi/cli/experiment.hpp"
#include "qrabi/cli/output.hpp"
#include "qrabi/cli/plot.hpp"
#include "qrabi/errors.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace qrabi;
using namespace qrabi::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("qrabi_cli_test_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string l;
    while (std::getline(ss, l)) out.push_back(l);
    return out;
}

ExperimentSpec parse(std::vector<std::string> args) {
    args.insert(args.begin(), "qrabi");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    auto spec = parse_command_line(static_cast<int>(argv.size()), argv.data());
    REQUIRE(spec.has_value());
    return *spec;
}

int run_main(std::vector<std::string> args) {
    args.insert(args.begin(), "qrabi");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    return main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
}

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("number formatting") {
    CHECK(format_number(0.0) == "0.0");
    CHECK(format_number(-0.0) == "0.0");
    CHECK(format_number(-0.5) == "-0.5");
    CHECK(format_number(1.5) == "1.5");
    CHECK(format_number(3.0) == "3.0");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(1e-20) == "1e-20");
    CHECK(format_number(123456789012345.0) == "1.23456789012e+14");
}

TEST_CASE("command-line defaults and overrides") {
    const ExperimentSpec d = parse({"spectrum"});
    CHECK(d.command == Command::spectrum);
    CHECK(d.omega_c == 1.0);
    CHECK(d.omega_0 == 1.0);
    CHECK(d.n_max == 15);
    CHECK_FALSE(d.diamagnetic);
    CHECK(d.g_steps == 201);
    CHECK(d.resolved_levels() == 30);

    const ExperimentSpec s = parse({"crossings", "--omega0", "0.5", "--nmax", "20", "--diamagnetic", "on",
                                    "--d-override", "0.3", "--g-min", "0.1", "--g-max", "2", "--g-steps", "11",
                                    "--format", "csv,svg", "--threads", "2", "--out", "somewhere"});
    CHECK(s.command == Command::crossings);
    CHECK(s.omega_0 == 0.5);
    CHECK(s.n_max == 20);
    CHECK(s.diamagnetic);
    REQUIRE(s.d_override.has_value());
    CHECK(*s.d_override == 0.3);
    CHECK(s.g_grid().size() == 11);
    CHECK(s.formats == std::vector<Format>{Format::csv, Format::svg});
    CHECK(s.threads == 2);
    CHECK(s.resolved_levels() == 8);
    CHECK(s.out_dir == fs::path("somewhere"));
}

TEST_CASE("config file supplies defaults, flags win") {
    const fs::path dir = scratch("config");
    fs::create_directories(dir);
    const fs::path cfg = dir / "run.ini";
    std::ofstream(cfg) << "# resonance study\nnmax = 9\nomega0 = 0.75\ndiamagnetic = on\ng-steps = 5\n"
                          "format = csv,json,svg\n";
    const ExperimentSpec s = parse({"entropy", "--config", cfg.string(), "--nmax", "12"});
    CHECK(s.n_max == 12);
    CHECK(s.omega_0 == 0.75);
    CHECK(s.diamagnetic);
    CHECK(s.g_steps == 5);
    CHECK(s.formats.size() == 3);
}

TEST_CASE("malformed command lines are config errors") {
    CHECK_THROWS_AS(parse({"nonsense"}), ConfigError);
    CHECK_THROWS_AS(parse({"spectrum", "--diamagnetic", "maybe"}), ConfigError);
    CHECK_THROWS_AS(parse({"spectrum", "--format", "png"}), ConfigError);
    CHECK_THROWS_AS(parse({"spectrum", "--nmax", "1"}), ConfigError);
    CHECK_THROWS_AS(parse({"spectrum", "--omega-c", "0"}), ConfigError);
    CHECK_THROWS_AS(parse({"spectrum", "--g-min", "2", "--g-max", "1"}), ConfigError);
    CHECK_THROWS_AS(parse({"spectrum", "--bogus"}), ConfigError);
    CHECK_THROWS_AS(parse({"spectrum", "--config", "/nonexistent/file.ini"}), ConfigError);
}

TEST_CASE("spectrum command writes the decoupled row") {
    const fs::path out = scratch("spectrum");
    const ExperimentSpec s = parse({"spectrum", "--g-min", "0", "--g-max", "0", "--g-steps", "1", "--nmax", "2",
                                    "--out", out.string(), "--format", "csv,json,svg"});
    const RunResult r = run(s);
    const auto csv = lines(slurp(out / "spectrum.csv"));
    REQUIRE(csv.size() == 2);
    CHECK(csv[0] == "g_over_wc,E0,E1,E2,E3");
    CHECK(csv[1] == "0.0,-0.5,0.5,0.5,1.5");

    const auto j = nlohmann::json::parse(slurp(out / "spectrum.json"));
    CHECK(j.contains("spec"));
    CHECK(j["columns"].size() == 5);
    CHECK(j["rows"][0][1].get<double>() == -0.5);
    CHECK(j["spec"]["nmax"] == 2);

    const std::string svg = slurp(out / "spectrum.svg");
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(count(svg, "<polyline") == 4);

    const auto manifest = nlohmann::json::parse(slurp(out / "manifest.json"));
    CHECK(manifest["spec"]["command"] == "spectrum");
    CHECK(manifest["spec"]["omega_c"] == 1.0);
    CHECK(manifest["artifacts"].size() == 3);
    CHECK(r.artifacts.back().filename() == "manifest.json");
}

TEST_CASE("entropy command at g = 0") {
    const fs::path out = scratch("entropy");
    run(parse({"entropy", "--g-min", "0", "--g-max", "0", "--g-steps", "1", "--out", out.string(), "--format",
               "csv"}));
    const auto csv = lines(slurp(out / "entropy.csv"));
    REQUIRE(csv.size() == 2);
    CHECK(csv[0] == "g_over_wc,S_qrm_bits,S_qrma_bits");
    CHECK(csv[1] == "0.0,0.0,0.0");
}

TEST_CASE("wigner command writes long-form q,p,w and a gnuplot surface") {
    const fs::path out = scratch("wigner");
    run(parse({"wigner", "--g", "0", "--nmax", "4", "--grid-extent", "2", "--grid-points", "5", "--out",
               out.string(), "--format", "csv,gnuplot"}));
    const auto csv = lines(slurp(out / "wigner.csv"));
    REQUIRE(csv.size() == 26);
    CHECK(csv[0] == "q,p,w");
    CHECK(csv[13] == "0.0,0.0,0.318309886184");
    CHECK(slurp(out / "wigner.gp").find("splot \"wigner.dat\"") != std::string::npos);
    CHECK(fs::exists(out / "wigner.dat"));
}

TEST_CASE("crossings command reports every adjacent pair") {
    const fs::path out = scratch("crossings");
    run(parse({"crossings", "--nmax", "6", "--levels", "4", "--g-max", "2", "--g-steps", "21", "--out",
               out.string(), "--format", "csv"}));
    const auto csv = lines(slurp(out / "crossings.csv"));
    REQUIRE(csv.size() == 4);
    CHECK(csv[0] == "level_lower,level_upper,g_over_wc_at_min,min_gap,at_boundary");
}

TEST_CASE("identical specs give identical bytes") {
    const fs::path a = scratch("det_a"), b = scratch("det_b");
    for (const auto& out : {a, b}) {
        run(parse({"entropy", "--nmax", "8", "--g-steps", "9", "--out", out.string(), "--format", "csv,json"}));
    }
    CHECK(slurp(a / "entropy.csv") == slurp(b / "entropy.csv"));
    // The echoed ExperimentSpec includes the output directory, so compare the JSON rows.
    CHECK(nlohmann::json::parse(slurp(a / "entropy.json"))["rows"] ==
          nlohmann::json::parse(slurp(b / "entropy.json"))["rows"]);
}

TEST_CASE("exit codes") {
    CHECK(run_main({"spectrum", "--nmax", "1"}) == kExitConfig);
    CHECK(run_main({"bogus"}) == kExitConfig);
    CHECK(run_main({"spectrum", "--format", "gnuplot", "--out", scratch("gp").string()}) == kExitConfig);

    const fs::path file = scratch("blocker");
    std::ofstream(file) << "not a directory";
    CHECK(run_main({"spectrum", "--nmax", "2", "--g-steps", "2", "--out", (file / "sub").string()}) == kExitIo);

    CHECK(exit_code_for(std::make_exception_ptr(NumericalError("x"))) == kExitNumerical);
    CHECK(exit_code_for(std::make_exception_ptr(SweepError(1.0, "x"))) == kExitNumerical);
    CHECK(exit_code_for(std::make_exception_ptr(IoError("x"))) == kExitIo);
    CHECK(exit_code_for(std::make_exception_ptr(ConfigError("x"))) == kExitConfig);

    CHECK(run_main({"spectrum", "--nmax", "2", "--g-steps", "3", "--out", scratch("ok").string()}) == kExitOk);
}

TEST_CASE("plot emission") {
    const fs::path out = scratch("plots");
    CMatrix one = CMatrix::Zero(3, 3);
    one(1, 1) = 1.0;
    const WignerGrid w = wigner(DensityMatrix(one, {3}), QuadratureGrid::square(3.0, 21));

    const auto svg_paths = emit_plot(w, Format::svg, out / "fock1", "Fock 1");
    REQUIRE(svg_paths.size() == 1);
    const std::string svg = slurp(svg_paths[0]);
    // Negative centre renders blue, positive ring renders red.
    CHECK(svg.find("fill=\"#0000ff\"") != std::string::npos);
    CHECK(svg.find("fill=\"#ff") != std::string::npos);
    CHECK(count(svg, "<rect") >= 21 * 21);

    const auto gp = emit_plot(w, Format::gnuplot, out / "fock1", "Fock 1");
    REQUIRE(gp.size() == 2);
    CHECK(slurp(gp[1]).find("splot") != std::string::npos);
    CHECK(lines(slurp(gp[0])).size() == 1 + 21 * 22);

    ModelConfig cfg;
    cfg.trunc = FockTruncation(2);
    const SpectrumSweep sweep = sweep_spectrum(cfg, uniform_grid(0.0, 1.0, 5), 4);
    CHECK_THROWS_AS(emit_plot(sweep, Format::gnuplot, out / "s", "s"), UnsupportedFormat);
    CHECK_THROWS_AS(emit_plot(sweep, Format::csv, out / "s", "s"), UnsupportedFormat);
    CHECK_THROWS_AS(emit_plot(w, Format::json, out / "w", "w"), UnsupportedFormat);

    const auto pts = entropy_sweep(cfg, uniform_grid(0.0, 1.0, 5));
    const auto ep = emit_plot(pts, Format::svg, out / "e", "entropy");
    CHECK(count(slurp(ep[0]), "<polyline") == 2);
}
