#ifndef UMBRAL_FAMILIES_HPP
#define UMBRAL_FAMILIES_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "umbral/moments.hpp"
#include "umbral/operators.hpp"

namespace umbral {

/// (ξ_{-1} n + η_{-1}) g_{n+1} + (ξ_0 n + η_0) g_n + ξ_1 n g_{n-1} = 0.
struct ClassicalParams {
    std::array<Scalar, 3> xi;
    std::array<Scalar, 2> eta;
};

/// (ξ_{-1} + η_{-1} q^n) g_{n+1} + (ξ_0 + η_0 q^n) g_n + ξ_1 (1 - q^n) g_{n-1} = 0.
struct QClassicalParams {
    Scalar q;
    std::array<Scalar, 3> xi;
    std::array<Scalar, 2> eta;
};

/// g_n = (α/β)(n+β)/(n+α), mu_n = n/(n+α).
struct KrallParams {
    Scalar alpha, beta;
};

/// mu_n = n + η(1 - (-1)^n).
struct DunklParams {
    Scalar eta;
};

struct FamilyInstance {
    std::string family;
    MomentSequence g;
    UmbralDerivative d;
    /// Derived moments in closed form, when the family provides them.
    std::optional<MomentSequence> g_tilde;
    std::size_t depth = 0;
};

/// mu_n = n. Moments are generated eagerly to g_{2N+2}, so a vanishing
/// leading coefficient below that index raises ParameterError.
FamilyInstance classical_instance(const ClassicalParams& p, std::size_t depth);

/// mu_n = (1 - q^n)/(1 - q). Rejects q = 0, q = 1 and q^n = 1 for n <= N.
FamilyInstance q_classical_instance(const QClassicalParams& p, std::size_t depth);

/// Rational family with a point mass at x = 1; g_tilde is
/// (g_{n+2} - g_1 g_{n+1}) / (mu_1 mu_{n+1}).
FamilyInstance krall_instance(const KrallParams& p, std::size_t depth);

/// (α(β-α)/β) ∫_0^1 x^n (x^{α-1} + δ(x-1)/(β-α)) dx, evaluated in closed form.
Scalar krall_measure_moment(const KrallParams& p, std::size_t n);

UmbralDerivative dunkl_mu(const DunklParams& p);

/// R = (ξ_{-1} x^2 + ξ_0 x + ξ_1) ∂_x + η_{-1} x + η_0 on x^0..x^N.
RaisingOperator classical_raising_operator(const ClassicalParams& p, std::size_t depth);

/// R x^n = (ξ_{-1} q^{-n} + η_{-1}) x^{n+1} + (ξ_0 q^{-n} + η_0) x^n
///       + ξ_1 (q^{-n} - 1) x^{n-1}, on x^0..x^N.
RaisingOperator q_classical_raising_operator(const QClassicalParams& p, std::size_t depth);

} // namespace umbral

#endif // UMBRAL_FAMILIES_HPP
