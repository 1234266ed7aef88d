#ifndef UMBRAL_POLYNOMIAL_HPP
#define UMBRAL_POLYNOMIAL_HPP

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "umbral/scalar.hpp"

namespace umbral {

/// Dense univariate polynomial c_0 + c_1 x + ... + c_d x^d over one
/// scalar mode. Trailing (exactly) zero coefficients are always trimmed,
/// so the zero polynomial has an empty coefficient vector and degree -1.
class Polynomial {
public:
    explicit Polynomial(Mode mode = Mode::exact) : mode_(mode) {}
    /// Mode is taken from the coefficients; an empty vector gives the
    /// exact zero polynomial.
    explicit Polynomial(std::vector<Scalar> coeffs);
    Polynomial(std::vector<Scalar> coeffs, Mode mode);

    static Polynomial constant(const Scalar& c);
    static Polynomial monomial(std::size_t degree, const Scalar& coeff);
    /// x^degree with unit coefficient.
    static Polynomial x_pow(std::size_t degree, Mode mode);

    Mode mode() const noexcept { return mode_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const;

    /// Coefficient of x^k (zero beyond the degree).
    Scalar coeff(std::size_t k) const;
    Scalar leading() const;
    const std::vector<Scalar>& coefficients() const noexcept { return c_; }

    Scalar evaluate(const Scalar& x) const;

    /// Multiplies by x^k.
    Polynomial shifted(std::size_t k) const;
    Polynomial scaled(const Scalar& s) const;
    Polynomial monic() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Scalar& s, const Polynomial& p) { return p.scaled(s); }

    /// Exact structural equality (mode and every coefficient).
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    /// Largest |a_k - b_k| over all coefficients.
    friend double max_coeff_diff(const Polynomial& a, const Polynomial& b);

private:
    void trim();
    void check_mode(const Scalar& s) const;

    Mode mode_;
    std::vector<Scalar> c_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

} // namespace umbral

#endif // UMBRAL_POLYNOMIAL_HPP
