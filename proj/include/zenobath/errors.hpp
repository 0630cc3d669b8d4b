#pragma once

#include <stdexcept>
#include <string>

namespace zenobath {

// Base for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad user input: invalid parameters, malformed config, unknown keys.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// Quadrature/iteration did not converge, or a result failed a sanity bound.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what) : Error(what) {}
};

// The self-consistency equation has no unique root in (0,1]; the
// transformation method itself is breaking down for these parameters.
class MethodValidityError : public Error {
public:
    explicit MethodValidityError(const std::string& what) : Error(what) {}
};

// No sign change of the pole condition in the scanned interval.
class PoleNotFoundError : public NumericalError {
public:
    explicit PoleNotFoundError(const std::string& what) : NumericalError(what) {}
};

// Two independent routes to the same quantity disagreed beyond tolerance.
class ConsistencyError : public NumericalError {
public:
    explicit ConsistencyError(const std::string& what) : NumericalError(what) {}
};

} // namespace zenobath
