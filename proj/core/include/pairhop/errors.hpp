// errors.hpp — Error taxonomy shared by the library and the CLI runner.

#pragma once

#include <stdexcept>
#include <string>

namespace pairhop {

// Malformed or inconsistent experiment configuration (CLI exit status 2).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A physics precondition does not hold: instability, off-resonance,
// vanishing denominator, invalid rates (CLI exit status 3).
struct PhysicsError : std::runtime_error {
    explicit PhysicsError(const std::string& what) : std::runtime_error(what) {}
};

// A runtime tolerance was violated: norm drift, jump-probability bound
// (CLI exit status 4).
struct ToleranceError : std::runtime_error {
    explicit ToleranceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pairhop
