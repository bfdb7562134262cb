// errors.hpp — exception taxonomy shared by all bosense components.

#pragma once

#include <stdexcept>
#include <string>

namespace bosense {

// Bad inputs: dimension mismatches, negative rates, malformed configs.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Physically meaningless evaluations: above-threshold networks, near-singular
// responses, violated averaging-time contracts, insensitive ports.
class PhysicsError : public std::runtime_error {
public:
    explicit PhysicsError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bosense
