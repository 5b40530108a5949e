#pragma once

#include <stdexcept>
#include <string>

namespace hfc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arguments outside the mathematical domain (alpha <= -1, z = 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Derivative order that the routine does not provide.
class UnsupportedOrder : public Error {
public:
    using Error::Error;
};

/// An iterative method failed to meet its stopping criterion.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

/// Coincident nodes or a vanishing R'(z_k).
class DegenerateSystem : public Error {
public:
    using Error::Error;
};

/// Malformed caller input (length mismatches and the like).
class InputError : public Error {
public:
    using Error::Error;
};

}  // namespace hfc
