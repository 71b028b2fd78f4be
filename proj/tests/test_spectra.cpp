#include "doctest.h"

#include "oracles.hpp"
#include "qrabi/errors.hpp"
#include "qrabi/spectra.hpp"

#include <cmath>
#include <random>

using namespace qrabi;

namespace {

ModelConfig resonant(double g, int n_max, bool dia = false) {
    ModelConfig cfg;
    cfg.g = g;
    cfg.trunc = FockTruncation(n_max);
    cfg.include_diamagnetic = dia;
    return cfg;
}

// Synthetic sweep from H(g) = [[g-1, δ],[δ, 1-g]].
SpectrumSweep two_level_sweep(double delta, const std::vector<double>& grid) {
    SpectrumSweep s;
    s.g_grid = grid;
    s.levels.resize(static_cast<Eigen::Index>(grid.size()), 2);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CMatrix h(2, 2);
        h << grid[i] - 1.0, delta, delta, 1.0 - grid[i];
        s.levels.row(static_cast<Eigen::Index>(i)) = eigensystem(Operator({2}, h)).values.transpose();
    }
    return s;
}

}  // namespace

TEST_CASE("eigensystem of a diagonal matrix") {
    CMatrix h = CMatrix::Zero(3, 3);
    h.diagonal() << 3.0, 1.0, 2.0;
    const EigenSystem es = eigensystem(Operator({3}, h));
    CHECK(es.values(0) == doctest::Approx(1.0));
    CHECK(es.values(1) == doctest::Approx(2.0));
    CHECK(es.values(2) == doctest::Approx(3.0));
    // Columns are permuted unit vectors (up to phase).
    CHECK(std::abs(es.vectors(1, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(es.vectors(2, 1)) == doctest::Approx(1.0));
    CHECK(std::abs(es.vectors(0, 2)) == doctest::Approx(1.0));
}

TEST_CASE("eigensystem rejects non-Hermitian input") {
    CHECK_THROWS_AS(eigensystem(annihilation(FockTruncation(4))), NumericalError);
}

TEST_CASE("eigensystem invariants on random Hermitian matrices") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const CMatrix m = oracle::random_matrix(rng, 24);
        const CMatrix h = 0.5 * (m + m.adjoint());
        const EigenSystem es = eigensystem(Operator({24}, h));
        for (Eigen::Index k = 0; k + 1 < es.values.size(); ++k) CHECK(es.values(k) <= es.values(k + 1));
        const CMatrix gram = es.vectors.adjoint() * es.vectors;
        CHECK((gram - CMatrix::Identity(24, 24)).cwiseAbs().maxCoeff() < 1e-9);
        for (Eigen::Index k = 0; k < es.values.size(); ++k) {
            CHECK((h * es.vectors.col(k) - es.values(k) * es.vectors.col(k)).norm() <=
                  1e-9 * (1.0 + std::abs(es.values(k))));
        }
    }
}

TEST_CASE("displaced-oscillator ground energy at ω_0 = 0") {
    // H = a†a + g σ_x (a + a†) splits into displaced oscillators with E_0 = -g².
    ModelConfig cfg = resonant(1.0, 40);
    cfg.omega_0 = 0.0;
    CHECK(std::abs(eigensystem(build_full(cfg)).values(0) + 1.0) < 1e-6);
}

TEST_CASE("trace equals the sum of the spectrum") {
    for (bool dia : {false, true}) {
        const Hamiltonian h = build_full(resonant(1.3, 20, dia));
        const double tr = h.op.data().trace().real();
        const double sum = eigensystem(h).values.sum();
        CHECK(std::abs(tr - sum) <= 1e-8 * std::abs(tr));
    }
}

TEST_CASE("sweep_spectrum basics") {
    const std::vector<double> g0{0.0};
    const SpectrumSweep s = sweep_spectrum(resonant(0.0, 2), g0, 4);
    CHECK(s.levels.rows() == 1);
    CHECK(s.levels(0, 0) == doctest::Approx(-0.5));
    CHECK(s.levels(0, 1) == doctest::Approx(0.5));
    CHECK(s.levels(0, 2) == doctest::Approx(0.5));
    CHECK(s.levels(0, 3) == doctest::Approx(1.5));
    CHECK(s.model == ModelTag::QRM);

    CHECK_THROWS_AS(sweep_spectrum(resonant(0.0, 2), std::vector<double>{}, 2), ConfigError);
    CHECK_THROWS_AS(sweep_spectrum(resonant(0.0, 2), std::vector<double>{1.0, 0.5}, 2), ConfigError);
    CHECK_THROWS_AS(sweep_spectrum(resonant(0.0, 2), g0, 5), ConfigError);
}

TEST_CASE("sweep failures name the offending coupling") {
    // A negative coupling in the grid violates the model contract at that point.
    const std::vector<double> grid{-1.0, 0.0};
    try {
        sweep_spectrum(resonant(0.0, 3), grid, 2);
        FAIL("expected SweepError");
    } catch (const SweepError& e) {
        CHECK(e.g() == -1.0);
    }
}

TEST_CASE("QRM and QRMA coincide at g = 0 and QRMA lies above elsewhere") {
    const auto grid = uniform_grid(0.0, 2.0, 41);
    const SpectrumSweep qrm = sweep_spectrum(resonant(0.0, 12, false), grid, 24);
    const SpectrumSweep qrma = sweep_spectrum(resonant(0.0, 12, true), grid, 24);
    CHECK(qrma.model == ModelTag::QRMA);
    CHECK((qrm.levels.row(0) - qrma.levels.row(0)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((qrma.levels - qrm.levels).minCoeff() >= -1e-12);
}

TEST_CASE("n_max = 2 QRM ground doublet gap shrinks past g = 1") {
    const auto grid = uniform_grid(0.0, 3.0, 61);
    const SpectrumSweep s = sweep_spectrum(resonant(0.0, 2), grid, 4);
    for (Eigen::Index i = 0; i + 1 < s.levels.rows(); ++i) {
        if (grid[static_cast<std::size_t>(i)] < 1.0) continue;
        CHECK(s.levels(i + 1, 1) - s.levels(i + 1, 0) < s.levels(i, 1) - s.levels(i, 0));
    }
}

TEST_CASE("avoided crossing of the synthetic two-level model") {
    const SpectrumSweep s = two_level_sweep(0.05, uniform_grid(0.0, 2.0, 41));
    const CrossingReport r = find_avoided_crossings(s, 0);
    CHECK_FALSE(r.at_boundary);
    CHECK(r.g_at_min == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.min_gap == doctest::Approx(0.1).epsilon(1e-9));

    // Grid offset so the minimum falls between samples: the parabola must
    // land closer to 2δ than the best sample does.
    const SpectrumSweep off = two_level_sweep(0.05, uniform_grid(0.013, 2.013, 81));
    const CrossingReport r2 = find_avoided_crossings(off, 0);
    const Eigen::VectorXd gap = off.levels.col(1) - off.levels.col(0);
    CHECK(std::abs(r2.min_gap - 0.1) < std::abs(gap.minCoeff() - 0.1));
    CHECK(std::abs(r2.g_at_min - 1.0) < 0.025);
}

TEST_CASE("flat parallel levels report a boundary minimum") {
    SpectrumSweep s;
    s.g_grid = uniform_grid(0.0, 1.0, 5);
    s.levels.resize(5, 2);
    s.levels.col(0).setConstant(0.0);
    s.levels.col(1).setConstant(1.0);
    const CrossingReport r = find_avoided_crossings(s, 0);
    CHECK(r.min_gap == 1.0);
    CHECK(r.at_boundary);
    CHECK(gap_local_minima(s, 0).empty());
}

TEST_CASE("crossing search preconditions") {
    SpectrumSweep s = two_level_sweep(0.1, {0.0, 1.0});
    CHECK_THROWS_AS(find_avoided_crossings(s, 0), ConfigError);
    s = two_level_sweep(0.1, uniform_grid(0.0, 1.0, 5));
    CHECK_THROWS_AS(find_avoided_crossings(s, 1), ConfigError);
}

TEST_CASE("QRM n_max = 15 gap minima are positive") {
    const SpectrumSweep s = sweep_spectrum(resonant(0.0, 15), uniform_grid(0.0, 2.0, 201), 8);
    int count = 0;
    for (int k = 0; k + 1 < 8; ++k) {
        for (const auto& r : gap_local_minima(s, k)) {
            CHECK(r.min_gap > 1e-6);
            CHECK(r.g_at_min >= 0.0);
            CHECK(r.g_at_min <= 2.0);
            ++count;
        }
    }
    CHECK(count > 0);
}

TEST_CASE("uniform_grid") {
    const auto g = uniform_grid(0.0, 3.0, 201);
    CHECK(g.size() == 201);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 3.0);
    CHECK(g[100] == doctest::Approx(1.5));
    CHECK(uniform_grid(2.0, 2.0, 1) == std::vector<double>{2.0});
    CHECK_THROWS_AS(uniform_grid(1.0, 0.0, 3), ConfigError);
}
