#ifndef UMBRAL_ERRORS_HPP
#define UMBRAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace umbral {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An arithmetic expression mixed exact and floating scalars.
class ModeMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// A moment functional (or a derived one) has a vanishing Hankel
/// determinant, so no orthogonal system exists at the requested depth.
class DegenerateFunctional : public Error {
public:
    DegenerateFunctional(const std::string& what, std::size_t index)
        : Error(what), index_(index) {}

    /// Index of the first vanishing Hankel determinant (Δ_index), or of
    /// the offending moment when the input itself is unusable.
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// Invalid parameters for a family, operator or command.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A lazily generated sequence cannot provide the requested index.
class InsufficientData : public Error {
public:
    using Error::Error;
};

/// Series truncation or other numerical approximation outside its
/// validated region.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

} // namespace umbral

#endif // UMBRAL_ERRORS_HPP
