#ifndef UMBRAL_SCALAR_HPP
#define UMBRAL_SCALAR_HPP

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "umbral/errors.hpp"

namespace umbral {

enum class Mode { exact, floating };

std::string_view to_string(Mode mode);

/// Comparison tolerance for floating scalars: a and b are equal iff
/// |a-b| <= abs_eps + rel_eps * max(|a|, |b|).
struct Tolerance {
    double abs_eps = 1e-12;
    double rel_eps = 1e-9;

    Tolerance() = default;
    Tolerance(double abs, double rel);

    /// Tolerance::default_tolerance() honours the UMBRAL_TOL environment
    /// variable (absolute epsilon) when it is set.
    static Tolerance default_tolerance();
};

/// A field element: an exact rational of arbitrary precision, or a
/// complex double. Arithmetic never promotes between the two; mixing
/// them raises ModeMismatch.
class Scalar {
public:
    using rational = mpq_class;
    using complex = std::complex<double>;

    /// Exact zero.
    Scalar() : value_(rational(0)) {}
    Scalar(const rational& q);
    Scalar(const complex& z) : value_(z) {}

    static Scalar exact(long num, long den = 1);
    static Scalar floating(double re, double im = 0.0) { return Scalar(complex(re, im)); }
    static Scalar integer(long n, Mode mode);
    static Scalar zero(Mode mode) { return integer(0, mode); }
    static Scalar one(Mode mode) { return integer(1, mode); }

    /// Parses "p/q", an integer, a decimal ("0.3" is 3/10 exactly) or,
    /// in floating mode, "a+bi" style complex literals.
    static Scalar parse(std::string_view text, Mode mode);

    Mode mode() const noexcept { return value_.index() == 0 ? Mode::exact : Mode::floating; }
    bool is_exact() const noexcept { return mode() == Mode::exact; }

    const rational& as_rational() const;
    const complex& as_complex() const;

    /// Converts to complex double regardless of mode (lossy for exact).
    complex to_complex() const;
    /// |value| as a double; used for ordering residuals.
    double magnitude() const;

    /// Exact zero in exact mode, or exactly 0+0i in floating mode.
    bool is_zero() const;
    /// Exact zero in exact mode, |value| <= tol.abs_eps in floating mode.
    bool is_zero(const Tolerance& tol) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    // Integers adopt the mode of the other operand.
    friend Scalar operator+(const Scalar& a, long b) { return a + integer(b, a.mode()); }
    friend Scalar operator-(const Scalar& a, long b) { return a - integer(b, a.mode()); }
    friend Scalar operator*(const Scalar& a, long b) { return a * integer(b, a.mode()); }
    friend Scalar operator/(const Scalar& a, long b) { return a / integer(b, a.mode()); }
    friend Scalar operator*(long a, const Scalar& b) { return integer(a, b.mode()) * b; }

    /// Bitwise/structural equality (exact comparison in both modes).
    /// Throws ModeMismatch for mixed modes.
    friend bool operator==(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    std::variant<rational, complex> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Checked equality: exact mode compares exactly and ignores tol.
bool scalar_eq(const Scalar& a, const Scalar& b, const Tolerance& tol);

/// Division that, in floating mode, rejects divisors with |b| <= abs_eps.
Scalar divide(const Scalar& a, const Scalar& b, const Tolerance& tol);

/// Integer power; negative exponents invert (zero base then throws).
Scalar pow(const Scalar& base, long exponent);

/// Throws ModeMismatch unless both operands share a mode.
void require_same_mode(const Scalar& a, const Scalar& b);

} // namespace umbral

#endif // UMBRAL_SCALAR_HPP
