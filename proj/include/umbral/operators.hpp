#ifndef UMBRAL_OPERATORS_HPP
#define UMBRAL_OPERATORS_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "umbral/polynomial.hpp"

namespace umbral {

/// Generalized derivative D x^n = mu_n x^{n-1}. The rule is evaluated
/// lazily and cached; mu_0 must be 0 and every later mu_n nonzero, which
/// is checked on first use of each index.
class UmbralDerivative {
public:
    using Rule = std::function<Scalar(std::size_t n)>;

    UmbralDerivative(Mode mode, Rule mu, std::string label = {});

    Mode mode() const;
    Scalar mu(std::size_t n) const;
    std::vector<Scalar> mu_prefix(std::size_t count) const;
    const std::string& label() const;

    /// (D f)_k = mu_{k+1} f_{k+1}.
    Polynomial apply(const Polynomial& f) const;

private:
    struct State;
    std::shared_ptr<State> state_;
};

inline Polynomial apply_D(const UmbralDerivative& d, const Polynomial& f)
{
    return d.apply(f);
}

/// Linear operator on polynomials of degree < size(), stored by its
/// action on monomials (column n is the image of x^n).
class MonomialOperator {
public:
    explicit MonomialOperator(std::vector<Polynomial> columns, Mode mode);

    Mode mode() const noexcept { return mode_; }
    std::size_t size() const noexcept { return columns_.size(); }
    const Polynomial& column(std::size_t n) const { return columns_.at(n); }
    /// Coefficient of x^s in the image of x^n.
    Scalar entry(std::size_t n, std::size_t s) const { return column(n).coeff(s); }

    /// Throws ParameterError when deg f >= size().
    Polynomial apply(const Polynomial& f) const;

    /// this ∘ other, on the monomials other can map.
    MonomialOperator after(const MonomialOperator& other) const;

private:
    Mode mode_;
    std::vector<Polynomial> columns_;
};

/// D restricted to x^0..x^{count-1}.
MonomialOperator as_operator(const UmbralDerivative& d, std::size_t count);

struct BandInfo {
    /// False when the band reaches too deep to certify locality at this
    /// depth (2 j > N for columns 0..N).
    bool local = true;
    /// j: R x^n = nu_{n+1} x^{n+1} + K_n^(0) x^n + ... + K_n^(j-1) x^{n-j+1}.
    std::size_t width = 0;
};

/// Degree-raising operator R x^n = nu_{n+1} x^{n+1} + Σ_s R_{ns} x^s,
/// stored densely by column for n = 0..N.
class RaisingOperator {
public:
    /// Column n must have exact degree n + 1.
    explicit RaisingOperator(std::vector<Polynomial> columns);

    Mode mode() const noexcept { return ops_.mode(); }
    /// Number of stored columns (N + 1).
    std::size_t size() const noexcept { return ops_.size(); }
    const Polynomial& column(std::size_t n) const { return ops_.column(n); }

    /// R_{ns}.
    Scalar entry(std::size_t n, std::size_t s) const { return ops_.entry(n, s); }
    /// nu_n = R_{n-1,n}, n >= 1.
    Scalar nu(std::size_t n) const;
    /// K_n^(i) = R_{n,n-i} for i >= -1; zero when i > n.
    Scalar K(std::size_t n, int i) const;
    Scalar rho(std::size_t n) const { return K(n, 0); }

    /// Entries with |R_ns| <= abs_eps (exactly zero in exact mode) are
    /// treated as absent.
    BandInfo band(const Tolerance& tol = Tolerance::default_tolerance()) const;

    /// Copy with R_{ns} replaced (fault injection for negative controls).
    RaisingOperator with_entry(std::size_t n, std::size_t s, const Scalar& value) const;

    Polynomial apply(const Polynomial& f) const { return ops_.apply(f); }
    const MonomialOperator& as_operator() const noexcept { return ops_; }

private:
    MonomialOperator ops_;
};

/// L = R∘D on x^0..x^{R.size()}.
MonomialOperator compose_RD(const RaisingOperator& r, const UmbralDerivative& d);
/// L~ = D∘R on x^0..x^{R.size()-1}.
MonomialOperator compose_DR(const UmbralDerivative& d, const RaisingOperator& r);

} // namespace umbral

#endif // UMBRAL_OPERATORS_HPP
