#ifndef UMBRAL_MOMENTS_HPP
#define UMBRAL_MOMENTS_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/scalar.hpp"

namespace umbral {

/// Moments g_n = <sigma, x^n> of a linear functional, generated on demand
/// and cached. Values are served normalized so that g_0 = 1; the raw
/// g_0 is kept as scale(). Copies share one cache (guarded by a mutex),
/// so a sequence behaves as an immutable value.
class MomentSequence {
public:
    using Rule = std::function<Scalar(std::size_t n)>;
    /// Produces raw g_n from the raw prefix g_0..g_{n-1}.
    using Extender = std::function<Scalar(std::size_t n, const std::vector<Scalar>& raw_prefix)>;

    /// Finite sequence; indices past the end raise InsufficientData.
    static MomentSequence from_values(std::vector<Scalar> raw);
    static MomentSequence from_rule(Mode mode, Rule rule);
    static MomentSequence from_extender(Mode mode, Extender extender);

    Mode mode() const;
    /// Normalized moment g_n / g_0.
    Scalar operator[](std::size_t n) const;
    Scalar raw(std::size_t n) const;
    /// Raw g_0 (the common factor divided out of every moment).
    Scalar scale() const;
    /// Normalized g_0..g_{count-1}.
    std::vector<Scalar> prefix(std::size_t count) const;
    /// Number of moments for finite sequences.
    std::optional<std::size_t> limit() const;

private:
    struct State;
    explicit MomentSequence(std::shared_ptr<State> state);
    std::shared_ptr<State> state_;
};

struct HankelReport {
    /// Δ_1..Δ_N.
    std::vector<Scalar> values;
    /// |Δ_{n-1}| times the largest moment in block n. In floating mode Δ_n
    /// counts as zero when the pivot Δ_n / Δ_{n-1} falls below abs_eps
    /// relative to that largest moment.
    std::vector<double> scales;
    /// 1-based n of the first vanishing Δ_n, if any.
    std::optional<std::size_t> first_zero;

    bool nondegenerate() const noexcept { return !first_zero; }
};

/// Δ_n = det |g_{i+k}|_{i,k<n} for n = 1..N (normalized moments).
/// Floating mode treats |Δ_n| <= abs_eps * scale_n as zero.
HankelReport hankel_determinants(const MomentSequence& g, std::size_t count,
                                 const Tolerance& tol = Tolerance::default_tolerance());

/// <sigma, f h> = Σ f_i h_j g_{i+j}.
Scalar bilinear(const MomentSequence& g, const Polynomial& f, const Polynomial& h);

/// <sigma, f>.
Scalar apply_functional(const MomentSequence& g, const Polynomial& f);

struct RecurrenceCoefficients {
    Scalar c_plus, c_zero, c_minus;
};

/// Moments satisfying c_+(n) g_{n+1} + c_0(n) g_n + c_-(n) g_{n-1} = 0.
/// g_0..g_count are generated eagerly; further moments on demand.
/// A vanishing c_+(n) raises ParameterError naming n.
MomentSequence moments_from_recurrence(std::function<RecurrenceCoefficients(std::size_t)> coeffs,
                                       const Scalar& g0, std::size_t count);

/// Functional with g~_0 = 1 annihilating Q_1..Q_N (each monic, deg Q_k = k).
/// Returns the finite sequence g~_0..g~_N.
MomentSequence moments_from_ops(std::span<const Polynomial> q_from_one);

} // namespace umbral

#endif // UMBRAL_MOMENTS_HPP
