#include "qrabi/fockspace.hpp"

#include "qrabi/errors.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <string>
#include <utility>

namespace qrabi {

namespace {

Eigen::Index product(const std::vector<int>& dims) {
    return std::accumulate(dims.begin(), dims.end(), Eigen::Index{1},
                           std::multiplies<Eigen::Index>());
}

void require_same_dims(const Operator& a, const Operator& b, const char* what) {
    if (a.dims() != b.dims()) {
        throw std::invalid_argument(std::string(what) + ": operator dims mismatch");
    }
}

}  // namespace

FockTruncation::FockTruncation(int n) : n_max(n) {
    if (n < 2) {
        throw ConfigError("Fock truncation needs n_max >= 2, got " + std::to_string(n));
    }
}

Operator::Operator(std::vector<int> dims, CMatrix data) : dims_(std::move(dims)), data_(std::move(data)) {
    if (dims_.empty()) {
        throw std::invalid_argument("Operator: dims must not be empty");
    }
    for (int d : dims_) {
        if (d < 1) throw std::invalid_argument("Operator: subsystem dimension must be >= 1");
    }
    const Eigen::Index n = product(dims_);
    if (data_.rows() != n || data_.cols() != n) {
        throw std::invalid_argument("Operator: matrix side " + std::to_string(data_.rows()) + "x" +
                                    std::to_string(data_.cols()) + " does not match dims product " +
                                    std::to_string(n));
    }
}

Operator Operator::identity(std::vector<int> dims) {
    const Eigen::Index n = product(dims);
    return Operator(std::move(dims), CMatrix::Identity(n, n));
}

Operator Operator::zero(std::vector<int> dims) {
    const Eigen::Index n = product(dims);
    return Operator(std::move(dims), CMatrix::Zero(n, n));
}

Operator& Operator::operator+=(const Operator& rhs) {
    require_same_dims(*this, rhs, "operator+");
    data_ += rhs.data_;
    return *this;
}

Operator& Operator::operator-=(const Operator& rhs) {
    require_same_dims(*this, rhs, "operator-");
    data_ -= rhs.data_;
    return *this;
}

Operator& Operator::operator*=(cplx s) {
    data_ *= s;
    return *this;
}

Operator operator*(const Operator& lhs, const Operator& rhs) {
    require_same_dims(lhs, rhs, "operator*");
    return Operator(lhs.dims_, lhs.data_ * rhs.data_);
}

Operator annihilation(FockTruncation trunc) {
    const int n = trunc.n_max;
    CMatrix a = CMatrix::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        a(k - 1, k) = std::sqrt(static_cast<double>(k));
    }
    return Operator({n}, std::move(a));
}

Operator creation(FockTruncation trunc) {
    return dagger(annihilation(trunc));
}

Operator number(FockTruncation trunc) {
    const int n = trunc.n_max;
    CMatrix d = CMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) d(k, k) = static_cast<double>(k);
    return Operator({n}, std::move(d));
}

Operator pauli(Axis which) {
    CMatrix m(2, 2);
    const cplx i(0.0, 1.0);
    switch (which) {
        case Axis::x: m << 0.0, 1.0, 1.0, 0.0; break;
        case Axis::y: m << 0.0, -i, i, 0.0; break;
        case Axis::z: m << 1.0, 0.0, 0.0, -1.0; break;
    }
    return Operator({2}, std::move(m));
}

Operator tensor(const Operator& left, const Operator& right) {
    const CMatrix& A = left.data();
    const CMatrix& B = right.data();
    const Eigen::Index ra = A.rows();
    const Eigen::Index rb = B.rows();
    CMatrix out(ra * rb, ra * rb);
    for (Eigen::Index i = 0; i < ra; ++i) {
        for (Eigen::Index j = 0; j < ra; ++j) {
            out.block(i * rb, j * rb, rb, rb) = A(i, j) * B;
        }
    }
    std::vector<int> dims = left.dims();
    dims.insert(dims.end(), right.dims().begin(), right.dims().end());
    return Operator(std::move(dims), std::move(out));
}

Operator dagger(const Operator& op) {
    return Operator(op.dims(), op.data().adjoint());
}

Operator commutator(const Operator& a, const Operator& b) {
    return a * b - b * a;
}

double max_abs(const Operator& op) {
    return op.data().size() == 0 ? 0.0 : op.data().cwiseAbs().maxCoeff();
}

bool is_hermitian(const Operator& op, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("is_hermitian: tol must be > 0");
    return (op.data() - op.data().adjoint()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace qrabi
