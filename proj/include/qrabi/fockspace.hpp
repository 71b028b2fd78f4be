// fockspace.hpp: truncated oscillator and qubit operator algebra
//
// Every composite operator in this library lives on qubit ⊗ cavity with the
// qubit factor first, so the composite index is  i = qubit * n_max + n.
// Qubit index 0 is the excited state |e>, index 1 the ground state |g>.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

namespace qrabi {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Number of retained Fock states |0>..|n_max-1>.
struct FockTruncation {
    int n_max{2};

    explicit FockTruncation(int n);
};

enum class Axis { x, y, z };

// Dense operator with subsystem dimension bookkeeping.
class Operator {
public:
    Operator(std::vector<int> dims, CMatrix data);

    static Operator identity(std::vector<int> dims);
    static Operator zero(std::vector<int> dims);

    const std::vector<int>& dims() const noexcept { return dims_; }
    const CMatrix& data() const noexcept { return data_; }
    Eigen::Index size() const noexcept { return data_.rows(); }

    cplx operator()(Eigen::Index r, Eigen::Index c) const { return data_(r, c); }

    Operator& operator+=(const Operator& rhs);
    Operator& operator-=(const Operator& rhs);
    Operator& operator*=(cplx s);

    friend Operator operator+(Operator lhs, const Operator& rhs) { return lhs += rhs; }
    friend Operator operator-(Operator lhs, const Operator& rhs) { return lhs -= rhs; }
    friend Operator operator*(cplx s, Operator op) { return op *= s; }
    friend Operator operator*(double s, Operator op) { return op *= cplx(s, 0.0); }
    // Matrix product; dims must agree.
    friend Operator operator*(const Operator& lhs, const Operator& rhs);

private:
    std::vector<int> dims_;
    CMatrix data_;
};

Operator annihilation(FockTruncation trunc);
Operator creation(FockTruncation trunc);
Operator number(FockTruncation trunc);
Operator pauli(Axis which);

// Kronecker product; dims are concatenated (left factor first).
Operator tensor(const Operator& left, const Operator& right);
Operator dagger(const Operator& op);
Operator commutator(const Operator& a, const Operator& b);

// Largest absolute entry.
double max_abs(const Operator& op);
bool is_hermitian(const Operator& op, double tol);

}  // namespace qrabi
