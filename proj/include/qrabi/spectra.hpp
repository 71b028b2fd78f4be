// spectra.hpp: dense Hermitian eigendecomposition, coupling sweeps and
// avoided-crossing detection

#pragma once

#include "qrabi/model.hpp"
#include "qrabi/parallel.hpp"

#include <Eigen/Dense>

#include <span>
#include <string>
#include <vector>

namespace qrabi {

struct EigenSystem {
    Eigen::VectorXd values;  // ascending
    CMatrix vectors;         // columns aligned with values
};

// Full spectrum of a Hermitian operator. Throws NumericalError if the input
// is not Hermitian, the solver fails, or the residual check does not hold.
EigenSystem eigensystem(const Operator& h);
EigenSystem eigensystem(const Hamiltonian& h);

enum class ModelTag { QRM, QRMA };

std::string to_string(ModelTag tag);
inline ModelTag tag_of(const ModelConfig& cfg) {
    return cfg.include_diamagnetic ? ModelTag::QRMA : ModelTag::QRM;
}

struct SpectrumSweep {
    std::vector<double> g_grid;
    Eigen::MatrixXd levels;  // row i: lowest k eigenvalues at g_grid[i], ascending
    ModelTag model{ModelTag::QRM};

    int k_levels() const { return static_cast<int>(levels.cols()); }
};

// n evenly spaced points on [lo, hi] (endpoints included).
std::vector<double> uniform_grid(double lo, double hi, int n);

// Lowest k_levels of build_full(base with g = g_grid[i]) for every i.
SpectrumSweep sweep_spectrum(const ModelConfig& base, std::span<const double> g_grid, int k_levels,
                             Execution ex = Execution::parallel);

struct CrossingReport {
    int lower{0};
    int upper{1};
    double g_at_min{0.0};
    double min_gap{0.0};
    bool at_boundary{false};  // minimum sits on a grid endpoint; the gap may keep shrinking outside
};

// Global minimum of levels[k+1] - levels[k] over the sweep, refined between
// grid points by a three-point parabola.
CrossingReport find_avoided_crossings(const SpectrumSweep& sweep, int k);

// Every interior local minimum of the same gap, each refined the same way.
std::vector<CrossingReport> gap_local_minima(const SpectrumSweep& sweep, int k);

struct ConvergenceReport {
    int n_max{0};
    int n_max_doubled{0};
    double max_change{0.0};
    bool converged{false};
};

// Compares the lowest k_levels at cfg.trunc.n_max and at twice that.
ConvergenceReport check_convergence(const ModelConfig& cfg, int k_levels, double tol);

}  // namespace qrabi
