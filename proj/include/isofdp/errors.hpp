#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isofdp {

// Malformed input text (edge lists, GML, truth files).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Argument outside the domain of an operation (bad index, p = 0, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A request that cannot be satisfied for this input (graph too small,
// unreachable generator spec, node without finite-distance partner).
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Numerical post-condition violated (eigen residual, disconnected geodesics).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace isofdp
