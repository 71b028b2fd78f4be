#include "qrabi/entanglement.hpp"

#include "qrabi/errors.hpp"
#include "qrabi/spectra.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qrabi {

namespace {

constexpr double kStateTol = 1e-10;
constexpr double kRoundoffEigen = 1e-8;  // more negative than this is a broken input

void require_bipartite(const std::vector<int>& dims, const char* what) {
    if (dims.size() != 2 || dims[0] != 2 || dims[1] < 1) {
        throw std::invalid_argument(std::string(what) + ": expected dims [2, n_max]");
    }
}

double entropy_from_spectrum(const Eigen::VectorXd& lambda) {
    double s = 0.0;
    for (Eigen::Index k = 0; k < lambda.size(); ++k) {
        const double l = lambda(k);
        if (l < -kRoundoffEigen) {
            throw NumericalError("von_neumann_entropy: density matrix has eigenvalue " + std::to_string(l));
        }
        if (l > 0.0) s -= l * std::log2(l);
    }
    // -0.0 for pure states
    return s == 0.0 ? 0.0 : s;
}

}  // namespace

PureState::PureState(CVector amplitudes, std::vector<int> dims)
    : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
    require_bipartite(dims_, "PureState");
    if (amplitudes_.size() != 2 * dims_[1]) {
        throw std::invalid_argument("PureState: amplitude count does not match dims");
    }
    if (std::abs(amplitudes_.norm() - 1.0) > kStateTol) {
        throw std::invalid_argument("PureState: state is not normalized");
    }
}

DensityMatrix::DensityMatrix(CMatrix data, std::vector<int> dims) : data_(std::move(data)), dims_(std::move(dims)) {
    Eigen::Index n = 1;
    for (int d : dims_) {
        if (d < 1) throw std::invalid_argument("DensityMatrix: subsystem dimension must be >= 1");
        n *= d;
    }
    if (dims_.empty() || data_.rows() != n || data_.cols() != n) {
        throw std::invalid_argument("DensityMatrix: matrix shape does not match dims");
    }
    if ((data_ - data_.adjoint()).cwiseAbs().maxCoeff() > kStateTol) {
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    }
    if (std::abs(data_.trace() - cplx(1.0, 0.0)) > kStateTol) {
        throw std::invalid_argument("DensityMatrix: trace is not 1");
    }
}

DensityMatrix DensityMatrix::projector(const PureState& psi) {
    return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint(), psi.dims());
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(data_, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("DensityMatrix: eigenvalue solve did not converge");
    }
    return solver.eigenvalues();
}

GroundState ground_state(const Hamiltonian& h) {
    const EigenSystem es = eigensystem(h);
    CVector v = es.vectors.col(0);

    Eigen::Index i_max = 0;
    v.cwiseAbs().maxCoeff(&i_max);
    const cplx phase = v(i_max) / std::abs(v(i_max));
    v *= std::conj(phase);
    v(i_max) = cplx(v(i_max).real(), 0.0);
    v.normalize();

    const double e0 = es.values(0);
    const double gap = es.values.size() > 1 ? es.values(1) - e0 : 0.0;
    const bool quasi = es.values.size() > 1 && gap < 1e-10 * (1.0 + std::abs(e0));
    return GroundState{PureState(std::move(v), h.op.dims()), e0, gap, quasi};
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
    require_bipartite(rho.dims(), "partial_trace");
    const int nq = 2;
    const int nc = rho.dims()[1];
    const CMatrix& m = rho.data();
    if (keep == Subsystem::qubit) {
        CMatrix out = CMatrix::Zero(nq, nq);
        for (int q = 0; q < nq; ++q)
            for (int qp = 0; qp < nq; ++qp)
                for (int n = 0; n < nc; ++n) out(q, qp) += m(q * nc + n, qp * nc + n);
        return DensityMatrix(std::move(out), {nq});
    }
    CMatrix out = CMatrix::Zero(nc, nc);
    for (int n = 0; n < nc; ++n)
        for (int np = 0; np < nc; ++np)
            for (int q = 0; q < nq; ++q) out(n, np) += m(q * nc + n, q * nc + np);
    return DensityMatrix(std::move(out), {nc});
}

DensityMatrix reduce(const PureState& psi, Subsystem keep) {
    const int nc = psi.n_max();
    // Row q holds the cavity amplitudes conditioned on qubit state q.
    CMatrix block(2, nc);
    for (int q = 0; q < 2; ++q)
        for (int n = 0; n < nc; ++n) block(q, n) = psi.amplitude(q, n);

    if (keep == Subsystem::qubit) {
        return DensityMatrix(block * block.adjoint(), {2});
    }
    return DensityMatrix(block.transpose() * block.conjugate(), {nc});
}

double von_neumann_entropy(const DensityMatrix& rho) {
    return entropy_from_spectrum(rho.eigenvalues());
}

double photon_number(const PureState& psi) {
    double n_mean = 0.0;
    for (int q = 0; q < 2; ++q)
        for (int n = 0; n < psi.n_max(); ++n) n_mean += n * std::norm(psi.amplitude(q, n));
    return n_mean;
}

std::vector<EntropyPoint> entropy_sweep(const ModelConfig& base, std::span<const double> g_grid, Execution ex) {
    base.validate();
    if (g_grid.empty()) throw ConfigError("entropy_sweep: empty coupling grid");

    std::vector<EntropyPoint> out(g_grid.size());
    for_each_index(g_grid.size(), ex, [&](std::size_t i) {
        const double g = g_grid[i];
        try {
            EntropyPoint& pt = out[i];
            pt.g = g;
            const GroundState qrm = ground_state(build_full(base.with_g(g).with_diamagnetic(false)));
            const GroundState qrma = ground_state(build_full(base.with_g(g).with_diamagnetic(true)));
            pt.s_qrm = von_neumann_entropy(reduce(qrm.state, Subsystem::qubit));
            pt.s_qrma = von_neumann_entropy(reduce(qrma.state, Subsystem::qubit));
            pt.qrm_quasi_degenerate = qrm.quasi_degenerate;
            pt.qrma_quasi_degenerate = qrma.quasi_degenerate;
        } catch (const std::exception& e) {
            throw SweepError(g, e.what());
        }
    });
    return out;
}

}  // namespace qrabi
