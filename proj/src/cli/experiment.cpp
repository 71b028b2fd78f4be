#include "qrabi/cli/experiment.hpp"

#include "qrabi/cli/plot.hpp"
#include "qrabi/errors.hpp"
#include "qrabi/parallel.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace qrabi::cli {

namespace {

constexpr double kConvergenceTol = 1e-6;
constexpr int kConvergenceLevels = 4;

bool wants(const ExperimentSpec& spec, Format f) {
    return std::find(spec.formats.begin(), spec.formats.end(), f) != spec.formats.end();
}

// Collects artifacts and the manifest for one run.
class Emitter {
public:
    explicit Emitter(const ExperimentSpec& spec) : spec_(spec), spec_json_(spec.to_json()) {}

    void table(const std::string& name, const Table& t) {
        if (wants(spec_, Format::csv)) write(name + ".csv", to_csv(t));
        if (wants(spec_, Format::json)) write(name + ".json", table_json(t, spec_json_).dump(2) + "\n");
    }

    template <class Data>
    void plot(const std::string& name, const Data& data, const std::string& title, bool allow_gnuplot) {
        for (Format f : {Format::svg, Format::gnuplot}) {
            if (!wants(spec_, f) || (f == Format::gnuplot && !allow_gnuplot)) continue;
            for (auto& p : emit_plot(data, f, spec_.out_dir / name, title)) result_.artifacts.push_back(p);
        }
    }

    void warn(std::string w) { result_.warnings.push_back(std::move(w)); }

    void note(const std::string& key, nlohmann::ordered_json value) { extra_[key] = std::move(value); }

    RunResult finish() {
        nlohmann::ordered_json m;
        m["spec"] = spec_json_;
        auto names = nlohmann::ordered_json::array();
        for (const auto& p : result_.artifacts) names.push_back(p.filename().string());
        m["artifacts"] = names;
        for (auto& [k, v] : extra_.items()) m[k] = v;
        m["warnings"] = result_.warnings;
        write("manifest.json", m.dump(2) + "\n");
        return std::move(result_);
    }

private:
    void write(const std::string& name, const std::string& text) {
        const auto p = spec_.out_dir / name;
        write_text(p, text);
        result_.artifacts.push_back(p);
    }

    const ExperimentSpec& spec_;
    nlohmann::ordered_json spec_json_;
    nlohmann::ordered_json extra_ = nlohmann::ordered_json::object();
    RunResult result_;
};

nlohmann::ordered_json convergence_json(const ModelConfig& cfg, Emitter& em) {
    const int k = std::min(kConvergenceLevels, 2 * cfg.trunc.n_max);
    const ConvergenceReport r = check_convergence(cfg, k, kConvergenceTol);
    nlohmann::ordered_json j;
    j["g_over_wc"] = cfg.g;
    j["diamagnetic"] = cfg.include_diamagnetic;
    j["nmax"] = r.n_max;
    j["nmax_doubled"] = r.n_max_doubled;
    j["levels_compared"] = k;
    j["max_change"] = std::strtod(format_number(r.max_change).c_str(), nullptr);
    j["tolerance"] = kConvergenceTol;
    j["converged"] = r.converged;
    if (!r.converged) {
        em.warn("nmax=" + std::to_string(r.n_max) + " is not converged at g/omega_c=" + format_number(cfg.g) +
                (cfg.include_diamagnetic ? " (QRMA)" : " (QRM)") + ": lowest " + std::to_string(k) +
                " levels move by " + format_number(r.max_change) + " when nmax doubles");
    }
    return j;
}

void warn_quasi_degenerate(const std::vector<EntropyPoint>& pts, Emitter& em, const std::string& where) {
    for (const auto& p : pts) {
        if (p.qrm_quasi_degenerate) {
            em.warn(where + ": QRM ground state quasi-degenerate at g/omega_c=" + format_number(p.g));
        }
        if (p.qrma_quasi_degenerate) {
            em.warn(where + ": QRMA ground state quasi-degenerate at g/omega_c=" + format_number(p.g));
        }
    }
}

void run_spectrum(const ExperimentSpec& spec, Emitter& em) {
    const ModelConfig cfg = spec.model();
    const auto grid = spec.g_grid();
    const SpectrumSweep sweep = sweep_spectrum(cfg, grid, spec.resolved_levels());
    em.table("spectrum", spectrum_table(sweep));
    em.plot("spectrum", sweep, to_string(sweep.model) + " spectrum, nmax=" + std::to_string(spec.n_max), false);
    em.note("convergence", convergence_json(cfg.with_g(grid.back()), em));
}

void run_entropy(const ExperimentSpec& spec, Emitter& em) {
    const ModelConfig cfg = spec.model();
    const auto grid = spec.g_grid();
    const auto pts = entropy_sweep(cfg, grid);
    em.table("entropy", entropy_table(pts));
    em.plot("entropy", pts, "Ground-state entropy, nmax=" + std::to_string(spec.n_max), false);
    warn_quasi_degenerate(pts, em, "entropy");
    em.note("convergence", nlohmann::ordered_json::array({
                               convergence_json(cfg.with_g(grid.back()).with_diamagnetic(false), em),
                               convergence_json(cfg.with_g(grid.back()).with_diamagnetic(true), em)}));
}

void run_wigner(const ExperimentSpec& spec, Emitter& em) {
    const ModelConfig cfg = spec.model();
    const GroundState gs = ground_state(build_full(cfg));
    if (gs.quasi_degenerate) em.warn("wigner: ground state quasi-degenerate at g/omega_c=" + format_number(cfg.g));
    const WignerGrid w = wigner(reduce(gs.state, Subsystem::cavity), spec.quadrature_grid());
    em.table("wigner", wigner_table(w));
    em.plot("wigner", w,
            std::string(cfg.include_diamagnetic ? "QRMA" : "QRM") + " ground-state Wigner, g/omega_c=" +
                format_number(cfg.g) + ", nmax=" + std::to_string(spec.n_max),
            true);
    em.note("convergence", convergence_json(cfg, em));
}

void run_crossings(const ExperimentSpec& spec, Emitter& em) {
    const ModelConfig cfg = spec.model();
    const SpectrumSweep sweep = sweep_spectrum(cfg, spec.g_grid(), spec.resolved_levels());
    std::vector<CrossingReport> reports;
    for (int k = 0; k + 1 < sweep.k_levels(); ++k) reports.push_back(find_avoided_crossings(sweep, k));
    em.table("crossings", crossings_table(reports));
    em.plot("crossings", sweep, to_string(sweep.model) + " spectrum, nmax=" + std::to_string(spec.n_max), false);
}

// Curated figure set. Only out_dir, formats and threads of the ExperimentSpec apply.
void run_reproduce_paper(const ExperimentSpec& spec, Emitter& em) {
    const std::vector<double> spectrum_grid = uniform_grid(0.0, 3.0, 201);
    const std::vector<double> wigner_couplings = {0.0, 0.5, 1.0, 3.0, 7.0, 10.0};
    const QuadratureGrid panel_grid = QuadratureGrid::square(6.0, 101);
    const QuadratureGrid surface_grid = QuadratureGrid::square(6.0, 201);

    auto base = [](int n_max, bool dia) {
        ModelConfig cfg;
        cfg.omega_c = 1.0;
        cfg.omega_0 = 1.0;
        cfg.include_diamagnetic = dia;
        cfg.trunc = FockTruncation(n_max);
        return cfg;
    };
    auto model_name = [](bool dia) { return std::string(dia ? "QRMA" : "QRM"); };

    // Figures 1 and 2: spectra at nmax = 2 and 15.
    for (auto [fig, n_max] : {std::pair{"fig1", 2}, std::pair{"fig2", 15}}) {
        for (bool dia : {false, true}) {
            const std::string name = std::string(fig) + (dia ? "b" : "a");
            const SpectrumSweep sweep = sweep_spectrum(base(n_max, dia), spectrum_grid, 2 * n_max);
            em.table(name, spectrum_table(sweep));
            em.plot(name, sweep, model_name(dia) + " spectrum, nmax=" + std::to_string(n_max), false);
        }
    }

    // Figure 3: refined gap minima of the lowest 8 QRM levels, nmax = 15.
    {
        const SpectrumSweep sweep = sweep_spectrum(base(15, false), uniform_grid(0.0, 2.0, 201), 8);
        std::vector<CrossingReport> reports;
        for (int k = 0; k + 1 < 8; ++k) {
            for (const auto& r : gap_local_minima(sweep, k)) reports.push_back(r);
        }
        em.table("fig3", crossings_table(reports));
    }

    // Figures 4 and 5: Wigner panels over the caption couplings.
    for (auto [fig, n_max] : {std::pair{"fig4", 2}, std::pair{"fig5", 15}}) {
        for (bool dia : {false, true}) {
            const std::string name = std::string(fig) + (dia ? "b" : "a");
            Table bundle;
            bundle.columns = {"g_over_wc", "q", "p", "w"};
            for (double g : wigner_couplings) {
                const WignerGrid w = ground_state_wigner(base(n_max, dia).with_g(g), panel_grid);
                for (auto& row : wigner_table(w).rows) {
                    row.insert(row.begin(), g);
                    bundle.rows.push_back(std::move(row));
                }
                em.plot(name + "_g" + format_number(g), w,
                        model_name(dia) + " Wigner, g/omega_c=" + format_number(g) + ", nmax=" +
                            std::to_string(n_max),
                        false);
            }
            em.table(name, bundle);
        }
    }

    // Figures 6 and 7: surfaces at g/omega_c = 10.
    for (auto [fig, n_max] : {std::pair{"fig6", 2}, std::pair{"fig7", 15}}) {
        for (bool dia : {false, true}) {
            const std::string name = std::string(fig) + (dia ? "b" : "a");
            const WignerGrid w = ground_state_wigner(base(n_max, dia).with_g(10.0), surface_grid);
            em.table(name, wigner_table(w));
            em.plot(name, w, model_name(dia) + " Wigner surface, g/omega_c=10, nmax=" + std::to_string(n_max), true);
        }
    }

    // Figure 8: entropy of both models.
    auto conv = nlohmann::ordered_json::array();
    for (auto [name, n_max] : {std::pair{"fig8a", 2}, std::pair{"fig8b", 15}}) {
        const auto pts = entropy_sweep(base(n_max, false), spectrum_grid);
        em.table(name, entropy_table(pts));
        em.plot(name, pts, "Ground-state entropy, nmax=" + std::to_string(n_max), false);
        warn_quasi_degenerate(pts, em, name);
        for (bool dia : {false, true}) conv.push_back(convergence_json(base(n_max, dia).with_g(3.0), em));
    }
    em.note("convergence", conv);
    (void)spec;
}

}  // namespace

Table spectrum_table(const SpectrumSweep& sweep) {
    Table t;
    t.columns.push_back("g_over_wc");
    for (int k = 0; k < sweep.k_levels(); ++k) t.columns.push_back("E" + std::to_string(k));
    for (std::size_t i = 0; i < sweep.g_grid.size(); ++i) {
        std::vector<double> row{sweep.g_grid[i]};
        for (int k = 0; k < sweep.k_levels(); ++k) row.push_back(sweep.levels(static_cast<Eigen::Index>(i), k));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table entropy_table(const std::vector<EntropyPoint>& points) {
    Table t;
    t.columns = {"g_over_wc", "S_qrm_bits", "S_qrma_bits"};
    for (const auto& p : points) t.rows.push_back({p.g, p.s_qrm, p.s_qrma});
    return t;
}

Table wigner_table(const WignerGrid& w) {
    Table t;
    t.columns = {"q", "p", "w"};
    t.rows.reserve(static_cast<std::size_t>(w.grid.n_q) * static_cast<std::size_t>(w.grid.n_p));
    for (int j = 0; j < w.grid.n_p; ++j)
        for (int i = 0; i < w.grid.n_q; ++i) t.rows.push_back({w.grid.q(i), w.grid.p(j), w.at(i, j)});
    return t;
}

Table crossings_table(const std::vector<CrossingReport>& reports) {
    Table t;
    t.columns = {"level_lower", "level_upper", "g_over_wc_at_min", "min_gap", "at_boundary"};
    for (const auto& r : reports) {
        t.rows.push_back({static_cast<double>(r.lower), static_cast<double>(r.upper), r.g_at_min, r.min_gap,
                          r.at_boundary ? 1.0 : 0.0});
    }
    return t;
}

RunResult run(const ExperimentSpec& spec) {
    spec.validate();
    if (wants(spec, Format::gnuplot) && spec.command != Command::wigner &&
        spec.command != Command::reproduce_paper) {
        throw UnsupportedFormat("gnuplot output is only available for wigner and reproduce-paper");
    }
    set_thread_count(spec.threads);

    Emitter em(spec);
    switch (spec.command) {
        case Command::spectrum: run_spectrum(spec, em); break;
        case Command::entropy: run_entropy(spec, em); break;
        case Command::wigner: run_wigner(spec, em); break;
        case Command::crossings: run_crossings(spec, em); break;
        case Command::reproduce_paper: run_reproduce_paper(spec, em); break;
    }
    return em.finish();
}

int exit_code_for(std::exception_ptr e) {
    try {
        std::rethrow_exception(e);
    } catch (const ConfigError&) {
        return kExitConfig;
    } catch (const IoError&) {
        return kExitIo;
    } catch (const std::filesystem::filesystem_error&) {
        return kExitIo;
    } catch (const NumericalError&) {
        return kExitNumerical;
    } catch (const std::invalid_argument&) {
        return kExitConfig;
    } catch (...) {
        return kExitNumerical;
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        const auto spec = parse_command_line(argc, argv);
        if (!spec) return kExitOk;
        const RunResult r = run(*spec);
        for (const auto& w : r.warnings) err << "warning: " << w << '\n';
        out << "wrote " << r.artifacts.size() << " files to " << spec->out_dir.string() << '\n';
        return kExitOk;
    } catch (const std::exception& e) {
        const int code = exit_code_for(std::current_exception());
        err << "error: " << e.what() << '\n';
        return code;
    }
}

}  // namespace qrabi::cli
