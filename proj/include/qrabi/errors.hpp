#pragma once

#include <stdexcept>
#include <string>

namespace qrabi {

// Invalid user-supplied parameters (bad config, malformed grids, ...).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A numerical routine failed or produced a result violating its contract.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Same as NumericalError but tagged with the coupling value being processed.
class SweepError : public NumericalError {
public:
    SweepError(double g, const std::string& what)
        : NumericalError("at g/omega_c = " + std::to_string(g) + ": " + what), g_(g) {}

    double g() const noexcept { return g_; }

private:
    double g_;
};

// Reading or writing an artifact failed.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qrabi
