#include "qrabi/spectra.hpp"

#include "qrabi/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qrabi {

namespace {

constexpr double kResidualTol = 1e-9;

// Vertex of the parabola through (x0,y0),(x1,y1),(x2,y2), limited to the
// bracket and to [0, y1]. Falls back to the middle sample when the three
// points are not convex.
void refine_minimum(double x0, double y0, double x1, double y1, double x2, double y2,
                    double& x_min, double& y_min) {
    x_min = x1;
    y_min = y1;
    const double d01 = (y1 - y0) / (x1 - x0);
    const double d12 = (y2 - y1) / (x2 - x1);
    const double curvature = (d12 - d01) / (x2 - x0);  // half the second derivative
    if (!(curvature > 0.0)) return;
    // y(x) = y1 + s (x - x1) + curvature (x - x1)^2 with s the slope at x1
    const double s = d01 + curvature * (x1 - x0);
    double dx = -s / (2.0 * curvature);
    dx = std::clamp(dx, x0 - x1, x2 - x1);
    x_min = x1 + dx;
    y_min = std::clamp(y1 + s * dx + curvature * dx * dx, 0.0, y1);
}

Eigen::VectorXd gap_column(const SpectrumSweep& sweep, int k) {
    if (k < 0 || k + 1 >= sweep.k_levels()) {
        throw ConfigError("level pair (" + std::to_string(k) + "," + std::to_string(k + 1) +
                          ") outside the " + std::to_string(sweep.k_levels()) + " swept levels");
    }
    if (sweep.g_grid.size() < 3) {
        throw ConfigError("crossing search needs at least 3 grid points");
    }
    return sweep.levels.col(k + 1) - sweep.levels.col(k);
}

CrossingReport refined_at(const SpectrumSweep& sweep, const Eigen::VectorXd& gap, int k, Eigen::Index i) {
    CrossingReport r;
    r.lower = k;
    r.upper = k + 1;
    const auto& g = sweep.g_grid;
    const Eigen::Index last = gap.size() - 1;
    if (i == 0 || i == last) {
        r.g_at_min = g[static_cast<std::size_t>(i)];
        r.min_gap = std::max(0.0, gap(i));
        r.at_boundary = true;
        return r;
    }
    const auto u = static_cast<std::size_t>(i);
    refine_minimum(g[u - 1], gap(i - 1), g[u], gap(i), g[u + 1], gap(i + 1), r.g_at_min, r.min_gap);
    return r;
}

}  // namespace

EigenSystem eigensystem(const Operator& h) {
    const CMatrix& m = h.data();
    const double scale = std::max(1.0, max_abs(h));
    if (!is_hermitian(h, 1e-10 * scale)) {
        throw NumericalError("eigensystem: operator is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eigensystem: Hermitian eigendecomposition did not converge");
    }
    EigenSystem es{solver.eigenvalues(), solver.eigenvectors()};

    const CMatrix residual = m * es.vectors - es.vectors * es.values.asDiagonal();
    for (Eigen::Index k = 0; k < es.values.size(); ++k) {
        if (!std::isfinite(es.values(k)) ||
            residual.col(k).norm() > kResidualTol * (1.0 + std::abs(es.values(k)))) {
            throw NumericalError("eigensystem: residual check failed for eigenpair " + std::to_string(k));
        }
    }
    return es;
}

EigenSystem eigensystem(const Hamiltonian& h) {
    return eigensystem(h.op);
}

std::string to_string(ModelTag tag) {
    return tag == ModelTag::QRM ? "QRM" : "QRMA";
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
    if (n < 1) throw ConfigError("grid needs at least one point");
    if (n == 1) return {lo};
    if (!(hi > lo)) throw ConfigError("grid upper bound must exceed lower bound");
    std::vector<double> out(static_cast<std::size_t>(n));
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = lo + step * i;
    out.back() = hi;
    return out;
}

SpectrumSweep sweep_spectrum(const ModelConfig& base, std::span<const double> g_grid, int k_levels,
                             Execution ex) {
    base.validate();
    if (g_grid.empty()) throw ConfigError("sweep_spectrum: empty coupling grid");
    if (!std::is_sorted(g_grid.begin(), g_grid.end())) {
        throw ConfigError("sweep_spectrum: coupling grid must be ascending");
    }
    const int dim = 2 * base.trunc.n_max;
    if (k_levels < 1 || k_levels > dim) {
        throw ConfigError("sweep_spectrum: k_levels must lie in [1, " + std::to_string(dim) + "]");
    }

    SpectrumSweep sweep;
    sweep.g_grid.assign(g_grid.begin(), g_grid.end());
    sweep.levels.resize(static_cast<Eigen::Index>(g_grid.size()), k_levels);
    sweep.model = tag_of(base);

    for_each_index(g_grid.size(), ex, [&](std::size_t i) {
        const double g = g_grid[i];
        try {
            const EigenSystem es = eigensystem(build_full(base.with_g(g)));
            sweep.levels.row(static_cast<Eigen::Index>(i)) = es.values.head(k_levels).transpose();
        } catch (const std::exception& e) {
            throw SweepError(g, e.what());
        }
    });
    return sweep;
}

CrossingReport find_avoided_crossings(const SpectrumSweep& sweep, int k) {
    const Eigen::VectorXd gap = gap_column(sweep, k);
    Eigen::Index i_min = 0;
    gap.minCoeff(&i_min);
    return refined_at(sweep, gap, k, i_min);
}

std::vector<CrossingReport> gap_local_minima(const SpectrumSweep& sweep, int k) {
    const Eigen::VectorXd gap = gap_column(sweep, k);
    std::vector<CrossingReport> out;
    for (Eigen::Index i = 1; i + 1 < gap.size(); ++i) {
        if (gap(i) <= gap(i - 1) && gap(i) < gap(i + 1)) {
            out.push_back(refined_at(sweep, gap, k, i));
        }
    }
    return out;
}

ConvergenceReport check_convergence(const ModelConfig& cfg, int k_levels, double tol) {
    cfg.validate();
    if (k_levels < 1 || k_levels > 2 * cfg.trunc.n_max) {
        throw ConfigError("check_convergence: k_levels out of range");
    }
    ModelConfig doubled = cfg;
    doubled.trunc = FockTruncation(2 * cfg.trunc.n_max);

    const Eigen::VectorXd coarse = eigensystem(build_full(cfg)).values.head(k_levels);
    const Eigen::VectorXd fine = eigensystem(build_full(doubled)).values.head(k_levels);

    ConvergenceReport r;
    r.n_max = cfg.trunc.n_max;
    r.n_max_doubled = doubled.trunc.n_max;
    r.max_change = (coarse - fine).cwiseAbs().maxCoeff();
    r.converged = r.max_change < tol;
    return r;
}

}  // namespace qrabi
