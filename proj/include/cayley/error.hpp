#ifndef CAYLEY_ERROR_HPP
#define CAYLEY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cayley {

/// Raised when a well-formed input is rejected on mathematical grounds
/// (indeterminate Riemann-Roch band, non-Fredholm rate, non-integral weight
/// set, degenerate coupling, unsupported connection). CLI exit code 1.
class math_error : public std::runtime_error {
public:
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised for malformed input or violated preconditions (bad rational
/// strings, empty windows, parse errors, division by zero). CLI exit code 2.
class usage_error : public std::runtime_error {
public:
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cayley

#endif
