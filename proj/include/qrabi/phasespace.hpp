// phasespace.hpp: Wigner quasi-probability of a cavity density matrix
//
// Convention: α = (q + i p)/√2 with ħ = 1, so the vacuum is
// W(q, p) = exp(-q² - p²)/π and every W satisfies |W| ≤ 1/π.

#pragma once

#include "qrabi/entanglement.hpp"
#include "qrabi/model.hpp"
#include "qrabi/parallel.hpp"

#include <Eigen/Dense>

namespace qrabi {

enum class Quadrature { q, p };

struct QuadratureGrid {
    double q_min{-6.0};
    double q_max{6.0};
    double p_min{-6.0};
    double p_max{6.0};
    int n_q{201};
    int n_p{201};

    static QuadratureGrid square(double extent, int points) {
        return QuadratureGrid{-extent, extent, -extent, extent, points, points};
    }

    void validate() const;
    double dq() const { return (q_max - q_min) / (n_q - 1); }
    double dp() const { return (p_max - p_min) / (n_p - 1); }
    double q(int i) const { return i == n_q - 1 ? q_max : q_min + dq() * i; }
    double p(int j) const { return j == n_p - 1 ? p_max : p_min + dp() * j; }
};

struct WignerGrid {
    QuadratureGrid grid;
    Eigen::MatrixXd values;  // values(j, i) = W(q_i, p_j); rows follow p

    double at(int i_q, int j_p) const { return values(j_p, i_q); }
};

// W at a single phase-space point, summed with the stable Fock-basis
// recurrence (no factorials). rho must be a cavity-only density matrix.
double wigner_at(const DensityMatrix& rho, double q, double p);

WignerGrid wigner(const DensityMatrix& rho, const QuadratureGrid& grid, Execution ex = Execution::parallel);

// Independent route through the Wigner characteristic function
//   W = (1/π²) ∫ Tr(ρ D(λ)) exp(λ*γ - λγ*) d²λ
// integrated with the trapezoid rule on [-extent, extent]². Slow; meant for
// spot checks at a handful of points. extent <= 0 picks a default that
// covers the characteristic function of an n_max-state density matrix.
double wigner_via_characteristic(const DensityMatrix& rho, double q, double p, int points = 401,
                                 double extent = 0.0);

// Trapezoidal ∫∫ W dq dp over the grid.
double wigner_normalization(const WignerGrid& w);

// Trapezoidal integral over the other quadrature; for Quadrature::q this
// approximates <q|ρ|q> at each q_i.
Eigen::VectorXd wigner_marginal(const WignerGrid& w, Quadrature axis);

// Variance of the normalized marginal along one quadrature.
double marginal_variance(const WignerGrid& w, Quadrature axis);

// build_full → ground_state → reduce to the cavity → wigner.
WignerGrid ground_state_wigner(const ModelConfig& cfg, const QuadratureGrid& grid,
                               Execution ex = Execution::parallel);

}  // namespace qrabi
