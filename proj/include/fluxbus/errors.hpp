// errors.hpp — exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace fluxbus {

// Raised when a numerical procedure cannot deliver its advertised accuracy,
// e.g. a generator residual above tolerance or a non-hermitian exponent.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a configuration file or key/value override is malformed or
// names a key outside the schema.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fluxbus
