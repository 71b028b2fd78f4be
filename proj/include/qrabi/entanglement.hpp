// entanglement.hpp: ground states, reduced density matrices and the
// qubit–field von Neumann entropy

#pragma once

#include "qrabi/model.hpp"
#include "qrabi/parallel.hpp"

#include <span>
#include <vector>

namespace qrabi {

enum class Subsystem { qubit, cavity };

// Normalized state vector on qubit ⊗ cavity.
class PureState {
public:
    PureState(CVector amplitudes, std::vector<int> dims);

    const CVector& amplitudes() const noexcept { return amplitudes_; }
    const std::vector<int>& dims() const noexcept { return dims_; }
    int n_max() const { return dims_.at(1); }

    cplx amplitude(int qubit, int n) const { return amplitudes_(qubit * n_max() + n); }

private:
    CVector amplitudes_;
    std::vector<int> dims_;
};

// Hermitian, unit-trace matrix. Positivity is checked where it matters
// (von_neumann_entropy) because roundoff can leave tiny negative eigenvalues.
class DensityMatrix {
public:
    DensityMatrix(CMatrix data, std::vector<int> dims);

    static DensityMatrix projector(const PureState& psi);

    const CMatrix& data() const noexcept { return data_; }
    const std::vector<int>& dims() const noexcept { return dims_; }
    Eigen::VectorXd eigenvalues() const;

private:
    CMatrix data_;
    std::vector<int> dims_;
};

struct GroundState {
    PureState state;
    double energy{0.0};
    double gap{0.0};                // E_1 - E_0
    bool quasi_degenerate{false};   // gap < 1e-10 (1 + |E_0|); the state is then sensitive to roundoff
};

// Lowest eigenvector with its phase fixed so the largest-magnitude amplitude
// is real and positive.
GroundState ground_state(const Hamiltonian& h);

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

// Same as partial_trace(DensityMatrix::projector(psi), keep) without forming
// the full projector.
DensityMatrix reduce(const PureState& psi, Subsystem keep);

// S = -Tr(ρ log2 ρ) in bits.
double von_neumann_entropy(const DensityMatrix& rho);

// <a†a> in a composite state.
double photon_number(const PureState& psi);

struct EntropyPoint {
    double g{0.0};
    double s_qrm{0.0};
    double s_qrma{0.0};
    bool qrm_quasi_degenerate{false};
    bool qrma_quasi_degenerate{false};
};

// Ground-state qubit entropy of both models at each coupling; the
// include_diamagnetic flag of base is ignored.
std::vector<EntropyPoint> entropy_sweep(const ModelConfig& base, std::span<const double> g_grid,
                                        Execution ex = Execution::parallel);

}  // namespace qrabi
