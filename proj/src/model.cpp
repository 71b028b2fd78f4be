#include "qrabi/model.hpp"

#include "qrabi/errors.hpp"

#include <cmath>
#include <string>

namespace qrabi {

namespace {

constexpr double kHermitianTol = 1e-10;

Operator field_quadrature(FockTruncation trunc) {
    const Operator a = annihilation(trunc);
    return a + dagger(a);
}

Hamiltonian checked(Operator op, const ModelConfig& cfg) {
    if (!is_hermitian(op, kHermitianTol)) {
        throw NumericalError("Hamiltonian is not Hermitian");
    }
    return Hamiltonian{std::move(op), cfg};
}

}  // namespace

void ModelConfig::validate() const {
    if (!std::isfinite(omega_c) || omega_c <= 0.0) {
        throw ConfigError("omega_c must be > 0, got " + std::to_string(omega_c));
    }
    if (!std::isfinite(omega_0) || omega_0 < 0.0) {
        throw ConfigError("omega_0 must be >= 0, got " + std::to_string(omega_0));
    }
    if (!std::isfinite(g) || g < 0.0) {
        throw ConfigError("g must be >= 0, got " + std::to_string(g));
    }
    if (d_override && (!std::isfinite(*d_override) || *d_override < 0.0)) {
        throw ConfigError("d_override must be >= 0, got " + std::to_string(*d_override));
    }
    if (trunc.n_max < 2) {
        throw ConfigError("n_max must be >= 2");
    }
}

double ModelConfig::diamagnetic_constant() const {
    return d_override ? *d_override : g * g / omega_c;
}

Hamiltonian build_rabi(const ModelConfig& cfg) {
    cfg.validate();
    const int n = cfg.trunc.n_max;
    const Operator id2 = Operator::identity({2});
    const Operator idn = Operator::identity({n});

    Operator h = cfg.omega_c * tensor(id2, number(cfg.trunc));
    h += (0.5 * cfg.omega_0) * tensor(pauli(Axis::z), idn);
    h += cfg.g * tensor(pauli(Axis::x), field_quadrature(cfg.trunc));
    return checked(std::move(h), cfg);
}

Hamiltonian build_diamagnetic(const ModelConfig& cfg) {
    cfg.validate();
    // Square the truncated quadrature explicitly so the cutoff deficit in the
    // last diagonal entry matches what the linear coupling term sees.
    const Operator x = field_quadrature(cfg.trunc);
    Operator h = cfg.diamagnetic_constant() * tensor(Operator::identity({2}), x * x);
    return checked(std::move(h), cfg);
}

Hamiltonian build_full(const ModelConfig& cfg) {
    Hamiltonian h = build_rabi(cfg);
    if (cfg.include_diamagnetic) {
        h.op += build_diamagnetic(cfg).op;
    }
    return h;
}

Operator parity_operator(FockTruncation trunc) {
    const int n = trunc.n_max;
    CMatrix p = CMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) p(k, k) = (k % 2 == 0) ? 1.0 : -1.0;
    return tensor(pauli(Axis::z), Operator({n}, std::move(p)));
}

}  // namespace qrabi
