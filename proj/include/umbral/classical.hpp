#ifndef UMBRAL_CLASSICAL_HPP
#define UMBRAL_CLASSICAL_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "umbral/moments.hpp"
#include "umbral/operators.hpp"
#include "umbral/orthopoly.hpp"

namespace umbral {

/// Q_n = D P_{n+1} / mu_{n+1} for n = 0..N-1, where N = P.size().
std::vector<Polynomial> derived_polys(const MonicPolySystem& p, const UmbralDerivative& d);

/// The functional tau that would make Q_n orthogonal, normalized to
/// tau_0 = 1:  tau_n = mu_1 <sigma, x^{n+1} P_1> / (mu_{n+1} h_1).
/// It satisfies <tau, Q_n> = 0 for every n >= 1 by construction.
MomentSequence derived_moments(const MomentSequence& g, const UmbralDerivative& d);

/// <tau, Q_n x^n> for n = 0..Q.size()-1.
std::vector<Scalar> derived_norms(std::span<const Polynomial> q, const MomentSequence& tau);

/// R from R Q_n = nu_{n+1} P_{n+1}, nu_{n+1} = mu_{n+1} h~_n / h_{n+1},
/// converted to the monomial basis. Builds columns 0..Q.size()-1; P must
/// reach degree Q.size().
RaisingOperator construct_R(const MonicPolySystem& p, std::span<const Polynomial> q,
                            std::span<const Scalar> h_tilde, const UmbralDerivative& d);

struct MainSystemReport {
    bool pass = false;
    std::size_t depth = 0;
    /// Residual of largest magnitude over the grid.
    Scalar max_residual;
    /// First failing (m, n) in row-major order.
    std::optional<std::array<std::size_t, 2>> failing_cell;
};

/// Residuals of mu_n g~_{n+m-1} = Σ_{s=0}^{m+1} R_{ms} g_{n+s} for
/// 0 <= m, n <= N. The term g~_{-1} only appears with mu_0 = 0.
MainSystemReport verify_main_system(const MomentSequence& g, const MomentSequence& g_tilde,
                                    const UmbralDerivative& d, const RaisingOperator& r,
                                    std::size_t depth,
                                    const Tolerance& tol = Tolerance::default_tolerance());

enum class ClassicalStatus { classical, not_orthogonal, degenerate_tau };

std::string_view to_string(ClassicalStatus status);

struct ClassicalReport {
    bool verdict = false;
    ClassicalStatus status = ClassicalStatus::not_orthogonal;
    std::size_t depth = 0;
    /// P_0..P_{N+1}.
    MonicPolySystem p;
    /// Q_0..Q_N.
    std::vector<Polynomial> q;
    MomentSequence tau;
    /// First vanishing Hankel determinant of tau, 1-based.
    std::optional<std::size_t> tau_degenerate_at;
    GramReport gram;
    std::optional<RaisingOperator> r;
    std::optional<MainSystemReport> main_system;
};

/// Decides whether Q_0..Q_N are orthogonal with respect to some functional.
/// Needs Δ_1..Δ_{N+2} of g nonzero (DegenerateFunctional otherwise); a
/// degenerate tau yields verdict false with status degenerate_tau.
ClassicalReport is_umbral_classical(const MomentSequence& g, const UmbralDerivative& d,
                                    std::size_t depth,
                                    const Tolerance& tol = Tolerance::default_tolerance());

struct EigenData {
    /// lambda_n = mu_n nu_n, lambda_0 = 0.
    std::vector<Scalar> lambda;
    /// tau_n = mu_n rho_{n-1} for n >= 1 (tau_seq[0] = 0): the subdiagonal
    /// coefficient of L x^n.
    std::vector<Scalar> tau_seq;
};

struct EigenReport {
    bool pass = false;
    EigenData data;
    /// max coefficient residual of L P_n - lambda_n P_n, n = 0..N+1.
    double residual_L = 0.0;
    /// max coefficient residual of L~ Q_n - lambda_{n+1} Q_n, n = 0..N.
    double residual_Lt = 0.0;
    bool lambdas_distinct = true;
    /// True when L x^n = lambda_n x^n + tau_n x^{n-1} for all stored n.
    bool hypergeometric = false;
};

EigenReport eigen_check(const MonicPolySystem& p, std::span<const Polynomial> q,
                        const UmbralDerivative& d, const RaisingOperator& r,
                        const Tolerance& tol = Tolerance::default_tolerance());

/// <sigma, f L h> == <sigma, h L f>.
bool symmetry_check(const MonomialOperator& l, const MomentSequence& g, const Polynomial& f,
                    const Polynomial& h, const Tolerance& tol = Tolerance::default_tolerance());

} // namespace umbral

#endif // UMBRAL_CLASSICAL_HPP
