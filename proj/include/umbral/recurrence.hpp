#ifndef UMBRAL_RECURRENCE_HPP
#define UMBRAL_RECURRENCE_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "umbral/moments.hpp"
#include "umbral/operators.hpp"

namespace umbral {

/// Constant-coefficient recurrence α_0 mu_n + ... + α_{j+1} mu_{n-j-1} = 0
/// together with the data derived from it.
struct RecurrenceProfile {
    /// α_0..α_{j+1}, α_0 = 1.
    std::vector<Scalar> alpha;
    /// Condition estimate of the rank decision (1 in exact mode).
    double condition = 1.0;
    /// Numerical roots z_k of Σ α_i z^{j+1-i}; mu_n = Σ a_k z_k^n when simple.
    std::vector<std::complex<double>> characteristic_roots;

    /// Set by normalize_profile: the rescaling mu_n -> q^n mu_n that makes
    /// Σ α_i = 0, the rescaled α_i q^i, and β_0..β_j with Σ β_i mu_{n-i} = 1.
    std::optional<Scalar> q;
    std::vector<Scalar> normalized_alpha;
    std::vector<Scalar> beta;
    std::optional<Scalar> gamma;

    /// Set by christoffel_factor: ε_{-1}..ε_j and π_{j+1}(x) = Σ ε_s x^{j-s}.
    std::vector<Scalar> epsilon;
    std::optional<Polynomial> christoffel;

    std::size_t order() const noexcept { return alpha.empty() ? 0 : alpha.size() - 1; }
    std::size_t j() const noexcept { return order() == 0 ? 0 : order() - 1; }
};

/// Smallest order r <= max_order whose recurrence holds on the whole prefix,
/// or nullopt. Requires mu.size() >= 2 max_order + 2.
std::optional<RecurrenceProfile> min_linear_recurrence(std::span<const Scalar> mu,
                                                       std::size_t max_order,
                                                       const Tolerance& tol =
                                                           Tolerance::default_tolerance());

/// Chooses a nonzero root q of Σ α_i q^i (closest to the unit circle, then
/// smallest argument in [0, 2π)), rescales, and solves for β. In exact mode
/// only rational roots qualify; Error when none exists.
RecurrenceProfile normalize_profile(RecurrenceProfile profile, std::span<const Scalar> mu,
                                    const Tolerance& tol = Tolerance::default_tolerance());

struct ChristoffelResult {
    bool consistent = false;
    /// ε_{-1}..ε_j.
    std::vector<Scalar> epsilon;
    Polynomial pi;
    double max_residual = 0.0;
    std::size_t equations = 0;
};

/// Solves g~_{n+j-1} = Σ_{s=-1}^{j} ε_s g_{n+j-s} over n = 0..equations-1
/// (0 picks a default of 2 j + 8, clamped to the data available). Requires
/// j >= 1.
ChristoffelResult christoffel_factor(const MomentSequence& g, const MomentSequence& g_tilde,
                                     std::size_t j, std::size_t equations = 0,
                                     const Tolerance& tol = Tolerance::default_tolerance());

/// Same, storing ε and π in the profile (j taken from its order).
ChristoffelResult christoffel_factor(const MomentSequence& g, const MomentSequence& g_tilde,
                                     RecurrenceProfile& profile,
                                     const Tolerance& tol = Tolerance::default_tolerance());

struct KCheckReport {
    bool pass = false;
    double max_residual = 0.0;
    /// Largest residual on each diagonal s = -1..j.
    std::vector<double> diagonal_residuals;
    /// Number of windows m checked.
    std::size_t windows = 0;
};

/// Residuals of Σ_{k=0}^{j+1} α_k K_{m+k}^(s) = 0 for s = -1..j and every
/// m with m + j + 1 <= min(depth, last stored column).
KCheckReport k_coefficient_check(const RaisingOperator& r, const RecurrenceProfile& profile,
                                 std::size_t depth,
                                 const Tolerance& tol = Tolerance::default_tolerance());

struct EquivalentInstance {
    MomentSequence g;
    UmbralDerivative d;
};

/// mu_n -> a q^n mu_n, g_n -> p^n g_n.
EquivalentInstance equivalence_transform(const MomentSequence& g, const UmbralDerivative& d,
                                         const Scalar& a, const Scalar& q, const Scalar& p);

/// One term w(n) q^n of mu_n; polynomial weights cover repeated roots.
struct CharacteristicTerm {
    Scalar root;
    Polynomial weight;
};

/// mu_n = Σ_k w_k(n) q_k^n; the weights must satisfy Σ w_k(0) = 0.
UmbralDerivative build_local_D(std::span<const CharacteristicTerm> terms);

/// mu_n = Σ_k a_k q_k^n with Σ a_k = 0, i.e. D = x^{-1} Σ a_k T_{q_k}.
UmbralDerivative build_local_D(std::span<const Scalar> roots, std::span<const Scalar> weights);

} // namespace umbral

#endif // UMBRAL_RECURRENCE_HPP
