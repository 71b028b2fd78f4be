// model.hpp: quantum Rabi Hamiltonian with and without the diamagnetic A² term
//
//   H_rabi = ω_c a†a + (ω_0/2) σ_z + g σ_x (a + a†)
//   H_dia  = D (a + a†)²,  D = g²/ω_c unless overridden
//
// ħ = 1 and every frequency is expressed in units of ω_c.

#pragma once

#include "qrabi/fockspace.hpp"

#include <optional>

namespace qrabi {

struct ModelConfig {
    double omega_c{1.0};
    double omega_0{1.0};
    double g{0.0};
    bool include_diamagnetic{false};
    std::optional<double> d_override{};
    FockTruncation trunc{15};

    // Throws ConfigError on out-of-range parameters.
    void validate() const;

    // D actually used by the diamagnetic term.
    double diamagnetic_constant() const;

    ModelConfig with_g(double new_g) const {
        ModelConfig c = *this;
        c.g = new_g;
        return c;
    }
    ModelConfig with_diamagnetic(bool on) const {
        ModelConfig c = *this;
        c.include_diamagnetic = on;
        return c;
    }
};

struct Hamiltonian {
    Operator op;
    ModelConfig config;
};

Hamiltonian build_rabi(const ModelConfig& cfg);
Hamiltonian build_diamagnetic(const ModelConfig& cfg);
Hamiltonian build_full(const ModelConfig& cfg);

// Π = σ_z ⊗ (−1)^{a†a}. Commutes with both Hamiltonians.
Operator parity_operator(FockTruncation trunc);

}  // namespace qrabi
