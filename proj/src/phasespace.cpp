#include "qrabi/phasespace.hpp"

#include "qrabi/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace qrabi {

namespace {

constexpr double kInvPi = std::numbers::inv_pi;
constexpr double kBoundTol = 1e-8;
// exp(-(q² + p²)) underflows to a denormal past this radius², which would
// silently zero the whole recurrence.
constexpr double kMaxRadiusSquared = 700.0;

void require_cavity(const DensityMatrix& rho) {
    if (rho.dims().size() != 1) {
        throw std::invalid_argument("wigner: expected a cavity-only density matrix; partial-trace the qubit first");
    }
    if (rho.dims()[0] < 2) {
        throw std::invalid_argument("wigner: cavity dimension must be >= 2");
    }
}

// Sums Re Σ ρ_mn W_mn(α) where W_mn is the Wigner function of |m><n|.
// The W_mn are generated column by column with the three-term recurrence of
// the associated Laguerre functions; buf holds one row of W_mn at a time.
double wigner_kernel(const CMatrix& rho, double q, double p, std::vector<cplx>& buf) {
    const Eigen::Index dim = rho.rows();
    const cplx a2 = cplx(q, p) * std::numbers::sqrt2;  // 2α
    const cplx a2c = std::conj(a2);

    buf.assign(static_cast<std::size_t>(dim), cplx{});
    buf[0] = cplx(std::exp(-(q * q + p * p)) * kInvPi, 0.0);
    double w = rho(0, 0).real() * buf[0].real();
    for (Eigen::Index n = 1; n < dim; ++n) {
        buf[n] = a2 * buf[n - 1] / std::sqrt(static_cast<double>(n));
        w += 2.0 * (rho(0, n) * buf[n]).real();
    }
    for (Eigen::Index m = 1; m < dim; ++m) {
        const double sm = std::sqrt(static_cast<double>(m));
        cplx prev = buf[m];
        buf[m] = (a2c * prev - sm * buf[m - 1]) / sm;
        w += (rho(m, m) * buf[m]).real();
        for (Eigen::Index n = m + 1; n < dim; ++n) {
            const cplx next = (a2 * buf[n - 1] - sm * prev) / std::sqrt(static_cast<double>(n));
            prev = buf[n];
            buf[n] = next;
            w += 2.0 * (rho(m, n) * buf[n]).real();
        }
    }
    return w;
}

void check_domain(const QuadratureGrid& grid) {
    const double qq = std::max(grid.q_min * grid.q_min, grid.q_max * grid.q_max);
    const double pp = std::max(grid.p_min * grid.p_min, grid.p_max * grid.p_max);
    if (qq + pp > kMaxRadiusSquared) {
        throw ConfigError("wigner: grid reaches q^2 + p^2 = " + std::to_string(qq + pp) +
                          ", beyond the recurrence range " + std::to_string(kMaxRadiusSquared));
    }
}

// ⟨m|D(λ)|n⟩ for all m, n via associated Laguerre recurrences, scaled in log
// space so large n does not overflow.
CMatrix displacement_elements(int dim, cplx lambda) {
    CMatrix d = CMatrix::Zero(dim, dim);
    const double r2 = std::norm(lambda);
    const double r = std::sqrt(r2);
    const double phi = std::arg(lambda);
    for (int k = 0; k < dim; ++k) {  // k = m - n >= 0
        double l_prev = 0.0;
        double l_cur = 1.0;  // L_0^{(k)}
        for (int n = 0; n + k < dim; ++n) {
            if (n == 1) {
                l_prev = 1.0;
                l_cur = 1.0 + k - r2;
            } else if (n > 1) {
                const double l_next = ((2.0 * (n - 1) + 1.0 + k - r2) * l_cur - (n - 1 + k) * l_prev) / n;
                l_prev = l_cur;
                l_cur = l_next;
            }
            const int m = n + k;
            double mag;
            if (k == 0) {
                mag = std::exp(-0.5 * r2);
            } else if (r == 0.0) {
                mag = 0.0;
            } else {
                mag = std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(m + 1.0)) + k * std::log(r) - 0.5 * r2);
            }
            // ⟨m|D|n⟩ = sqrt(n!/m!) λ^k e^{-|λ|²/2} L_n^{(k)}(|λ|²)
            d(m, n) = std::polar(mag * l_cur, k * phi);
            // ⟨n|D|m⟩ = sqrt(n!/m!) (-λ*)^k e^{-|λ|²/2} L_n^{(k)}(|λ|²)
            if (k > 0) {
                d(n, m) = std::polar(mag * l_cur * ((k % 2 == 0) ? 1.0 : -1.0), -k * phi);
            }
        }
    }
    return d;
}

double trapezoid_weight(int i, int n) {
    return (i == 0 || i == n - 1) ? 0.5 : 1.0;
}

}  // namespace

void QuadratureGrid::validate() const {
    if (!(q_max > q_min) || !(p_max > p_min)) {
        throw ConfigError("quadrature grid bounds must be strictly ordered");
    }
    if (n_q < 2 || n_p < 2) {
        throw ConfigError("quadrature grid needs at least 2 points per axis");
    }
    if (!std::isfinite(q_min) || !std::isfinite(q_max) || !std::isfinite(p_min) || !std::isfinite(p_max)) {
        throw ConfigError("quadrature grid bounds must be finite");
    }
}

double wigner_at(const DensityMatrix& rho, double q, double p) {
    require_cavity(rho);
    if (q * q + p * p > kMaxRadiusSquared) {
        throw ConfigError("wigner_at: point outside the recurrence range");
    }
    std::vector<cplx> buf;
    return wigner_kernel(rho.data(), q, p, buf);
}

WignerGrid wigner(const DensityMatrix& rho, const QuadratureGrid& grid, Execution ex) {
    require_cavity(rho);
    grid.validate();
    check_domain(grid);

    WignerGrid out{grid, Eigen::MatrixXd(grid.n_p, grid.n_q)};
    const CMatrix& m = rho.data();
    for_each_index(static_cast<std::size_t>(grid.n_p), ex, [&](std::size_t row) {
        const int j = static_cast<int>(row);
        std::vector<cplx> buf;
        const double p = grid.p(j);
        for (int i = 0; i < grid.n_q; ++i) {
            out.values(j, i) = wigner_kernel(m, grid.q(i), p, buf);
        }
    });

    if (!out.values.allFinite()) {
        throw NumericalError("wigner: non-finite value on the grid");
    }
    const double peak = out.values.cwiseAbs().maxCoeff();
    if (peak > kInvPi + kBoundTol) {
        throw NumericalError("wigner: |W| = " + std::to_string(peak) + " exceeds 1/pi");
    }
    return out;
}

double wigner_via_characteristic(const DensityMatrix& rho, double q, double p, int points, double extent) {
    require_cavity(rho);
    if (points < 3) throw ConfigError("wigner_via_characteristic: need at least 3 points");
    const int dim = static_cast<int>(rho.data().rows());
    if (extent <= 0.0) extent = 8.0 + 2.0 * std::sqrt(static_cast<double>(dim));

    const cplx gamma = cplx(q, p) / std::numbers::sqrt2;
    const double h = 2.0 * extent / (points - 1);
    const CMatrix rho_t = rho.data().transpose();

    double acc = 0.0;
    for (int iy = 0; iy < points; ++iy) {
        const double y = -extent + h * iy;
        for (int ix = 0; ix < points; ++ix) {
            const double x = -extent + h * ix;
            const cplx lambda(x, y);
            // Tr(ρ D) = Σ ρ_nm D_mn
            const cplx chi = rho_t.cwiseProduct(displacement_elements(dim, lambda)).sum();
            const double arg = 2.0 * (std::conj(lambda) * gamma).imag();
            const double wgt = trapezoid_weight(ix, points) * trapezoid_weight(iy, points);
            acc += wgt * (chi * std::polar(1.0, arg)).real();
        }
    }
    // d²λ integral gives W over α; W(q, p) carries the Jacobian dα = dq dp / 2.
    return 0.5 * acc * h * h * kInvPi * kInvPi;
}

double wigner_normalization(const WignerGrid& w) {
    const auto& g = w.grid;
    double acc = 0.0;
    for (int j = 0; j < g.n_p; ++j)
        for (int i = 0; i < g.n_q; ++i)
            acc += trapezoid_weight(i, g.n_q) * trapezoid_weight(j, g.n_p) * w.values(j, i);
    return acc * g.dq() * g.dp();
}

Eigen::VectorXd wigner_marginal(const WignerGrid& w, Quadrature axis) {
    const auto& g = w.grid;
    if (axis == Quadrature::q) {
        Eigen::VectorXd out = Eigen::VectorXd::Zero(g.n_q);
        for (int i = 0; i < g.n_q; ++i) {
            for (int j = 0; j < g.n_p; ++j) out(i) += trapezoid_weight(j, g.n_p) * w.values(j, i);
            out(i) *= g.dp();
        }
        return out;
    }
    Eigen::VectorXd out = Eigen::VectorXd::Zero(g.n_p);
    for (int j = 0; j < g.n_p; ++j) {
        for (int i = 0; i < g.n_q; ++i) out(j) += trapezoid_weight(i, g.n_q) * w.values(j, i);
        out(j) *= g.dq();
    }
    return out;
}

double marginal_variance(const WignerGrid& w, Quadrature axis) {
    const Eigen::VectorXd m = wigner_marginal(w, axis);
    const auto& g = w.grid;
    const int n = axis == Quadrature::q ? g.n_q : g.n_p;
    auto coord = [&](int i) { return axis == Quadrature::q ? g.q(i) : g.p(i); };

    double norm = 0.0, first = 0.0, second = 0.0;
    for (int i = 0; i < n; ++i) {
        const double wt = trapezoid_weight(i, n) * m(i);
        const double x = coord(i);
        norm += wt;
        first += wt * x;
        second += wt * x * x;
    }
    if (!(norm > 0.0)) throw NumericalError("marginal_variance: marginal integrates to a non-positive value");
    const double mean = first / norm;
    return second / norm - mean * mean;
}

WignerGrid ground_state_wigner(const ModelConfig& cfg, const QuadratureGrid& grid, Execution ex) {
    const GroundState gs = ground_state(build_full(cfg));
    return wigner(reduce(gs.state, Subsystem::cavity), grid, ex);
}

}  // namespace qrabi
