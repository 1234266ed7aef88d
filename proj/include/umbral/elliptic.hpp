#ifndef UMBRAL_ELLIPTIC_HPP
#define UMBRAL_ELLIPTIC_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "umbral/families.hpp"
#include "umbral/polynomial.hpp"

namespace umbral {

/// Weierstrass sigma function σ(z; g2, g3) from its Taylor double series,
/// summed by Horner's rule in z^2 up to z^{max_degree+1}.
///
/// Validated region: |z| * max(1, |g2|^{1/4}, |g3|^{1/6}) <= 8, where the
/// double-precision result agrees with a 60-digit evaluation to a few ulps
/// (relative to |σ| away from lattice points). Outside it evaluation throws
/// ConvergenceError. For g2 = g3 = 0 the series is exactly z and every
/// argument is accepted.
class SigmaEvaluator {
public:
    using complex = std::complex<double>;

    static constexpr double validated_scaled_radius = 8.0;

    SigmaEvaluator(complex g2, complex g3, std::size_t max_degree = 160);

    complex g2() const noexcept { return g2_; }
    complex g3() const noexcept { return g3_; }
    bool rational_limit() const noexcept { return rational_; }
    /// Largest |z| accepted.
    double radius() const noexcept { return radius_; }

    complex operator()(complex z) const;

private:
    complex g2_, g3_;
    bool rational_;
    double radius_;
    /// coeff_[i] multiplies z^{2i+1}.
    std::vector<complex> coeff_;
};

struct EllipticParams {
    Scalar g2, g3, w, alpha, beta;
};

/// y(x) = σ(w x) and the quantities built from it. Exact arithmetic is
/// allowed only in the rational limit g2 = g3 = 0, where y(x) = w x.
class EllipticModel {
public:
    explicit EllipticModel(EllipticParams p);

    const EllipticParams& params() const noexcept { return p_; }
    Mode mode() const noexcept { return p_.w.mode(); }
    bool rational_limit() const noexcept { return sigma_.rational_limit(); }
    const SigmaEvaluator& sigma() const noexcept { return sigma_; }

    Scalar y(const Scalar& x) const;
    /// y(x), throwing ParameterError when x w hits a lattice point.
    Scalar y_nonzero(const Scalar& x, std::string_view what) const;

    /// [a]_k = y(a) y(a+1) ... y(a+k-1).
    Scalar pochhammer(const Scalar& a, std::size_t k) const;

private:
    EllipticParams p_;
    SigmaEvaluator sigma_;
};

Scalar elliptic_pochhammer(const Scalar& a, std::size_t k, const EllipticModel& m);

struct EllipticSequences {
    std::vector<Scalar> mu;       // mu_0..mu_N
    std::vector<Scalar> g;        // g_0..g_{2N}
    std::vector<Scalar> g_tilde_raw; // g~_0..g~_{2N-2}, unnormalized
    std::vector<Scalar> g_tilde;  // same, scaled to g~_0 = 1
};

/// mu_n = y(n)/y(n+α), g_n = y(α) y(n+β) / (y(β) y(n+α)) and
/// g~_n = y(α) y(β-α) y(n+α+β+2) / (y(β)^2 y(n+α+2)).
EllipticSequences elliptic_mu_g(const EllipticModel& m, std::size_t depth);

/// The same sequences as a lazily extended instance (g~ unnormalized).
FamilyInstance elliptic_instance(const EllipticModel& m, std::size_t depth);

struct DegenerateIdentityReport {
    bool pass = false;
    /// mu_n mu_{m+1} g~_{n+m-1} = g_{n+m+1} - g_{m+1} g_n, 0 <= m, n <= N, m + n >= 1.
    double red_deg_mu = 0.0;
    /// mu_n mu_m / (mu_1 mu_{n+m-1}) = (g_{n+m} - g_m g_n)/(g_{n+m} - g_1 g_{n+m-1}), 1 <= m, n <= N.
    double red_mu_c = 0.0;
    /// |rhs(m, n) - rhs(n, m)| of the ratio form.
    double symmetry = 0.0;
};

/// Needs mu_0..mu_{2N}, g_0..g_{2N+1}, g~_0..g~_{2N-1}. Residuals are
/// absolute; pass uses abs_eps + rel_eps * (size of the terms involved).
DegenerateIdentityReport check_degenerate_identities(std::span<const Scalar> mu,
                                                     std::span<const Scalar> g,
                                                     std::span<const Scalar> g_tilde,
                                                     std::size_t depth, const Tolerance& tol);

DegenerateIdentityReport check_degenerate_identities(const EllipticModel& m, std::size_t depth,
                                                     const Tolerance& tol);

/// Σ_{k=0}^{n} [-n]_k [a1]_k [a2]_k / ([1]_k [b1]_k [b2]_k) x^k.
Polynomial elliptic_3E2(std::size_t n, const Scalar& a1, const Scalar& a2, const Scalar& b1,
                        const Scalar& b2, const EllipticModel& m);

/// Monic B_n 3E2(-n, α+n, 1+α-β-n(α+n); α, α-β-n(α+n); x).
Polynomial elliptic_P(std::size_t n, const EllipticModel& m);

struct EllipticRecurrence {
    std::vector<Scalar> A, C; // 0..N
    std::vector<Scalar> b;    // b_n = A_n + C_n, 0..N
    std::vector<Scalar> u;    // u_n = A_{n-1} C_n, n = 1..N
};

EllipticRecurrence elliptic_recurrence(const EllipticModel& m, std::size_t depth);

/// Parameters of the derived system: α -> α+2, β -> β+α+2.
EllipticParams shifted_params(const EllipticParams& p);

struct ShiftReport {
    bool pass = false;
    /// Max coefficient difference between Q_n and the shifted P_n, per n.
    std::vector<double> residuals;
    double max_residual = 0.0;
};

/// Q_n = D P_{n+1} / mu_{n+1} (with the elliptic mu) against elliptic_P of
/// the shifted parameters, n = 0..N.
ShiftReport shift_property_check(const EllipticModel& m, std::size_t depth, const Tolerance& tol);

} // namespace umbral

#endif // UMBRAL_ELLIPTIC_HPP
