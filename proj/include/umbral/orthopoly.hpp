#ifndef UMBRAL_ORTHOPOLY_HPP
#define UMBRAL_ORTHOPOLY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "umbral/moments.hpp"
#include "umbral/polynomial.hpp"

namespace umbral {

/// Monic orthogonal polynomials P_0..P_N with their three-term data
///   P_{n+1} = (x - b_n) P_n - u_n P_{n-1},   u_n = h_n / h_{n-1}.
class MonicPolySystem {
public:
    MonicPolySystem(std::vector<Polynomial> polys, std::vector<Scalar> b, std::vector<Scalar> u,
                    std::vector<Scalar> h);

    Mode mode() const noexcept { return mode_; }
    /// N, the largest stored degree.
    std::size_t size() const noexcept { return polys_.size() - 1; }

    const Polynomial& operator[](std::size_t n) const { return polys_.at(n); }
    const std::vector<Polynomial>& polys() const noexcept { return polys_; }

    /// b_n for 0 <= n < N.
    const Scalar& b(std::size_t n) const { return b_.at(n); }
    /// u_n for 1 <= n < N (or <= N when the norms reach h_N).
    const Scalar& u(std::size_t n) const;
    /// h_n, when known.
    const Scalar& h(std::size_t n) const { return h_.at(n); }

    const std::vector<Scalar>& b_values() const noexcept { return b_; }
    /// u_1, u_2, ... in order.
    const std::vector<Scalar>& u_values() const noexcept { return u_; }
    const std::vector<Scalar>& h_values() const noexcept { return h_; }

private:
    Mode mode_;
    std::vector<Polynomial> polys_;
    std::vector<Scalar> b_, u_, h_;
};

/// Builds P_0..P_N by solving <sigma, P_n x^k> = 0 (k < n). Requires
/// Δ_1..Δ_{N+1} nonzero; otherwise throws DegenerateFunctional carrying
/// the index of the first vanishing determinant.
MonicPolySystem monic_ops_from_moments(const MomentSequence& g, std::size_t degree,
                                       const Tolerance& tol = Tolerance::default_tolerance());

/// Forward iteration of the three-term recurrence with P_0 = 1,
/// P_{-1} = 0. b holds b_0..b_{N-1}; u holds u_1.. (at least N-1 values).
/// Norms are reported relative to h_0 = 1.
MonicPolySystem ops_from_recurrence(std::span<const Scalar> b, std::span<const Scalar> u,
                                    std::size_t degree);

struct GramEntry {
    std::size_t row = 0, col = 0;
    Scalar value;
};

struct GramReport {
    bool pass = false;
    /// Full symmetric Gram matrix, row-major (N+1) x (N+1).
    std::vector<std::vector<Scalar>> gram;
    /// Largest off-diagonal entry by magnitude (first in row-major order on ties).
    std::optional<GramEntry> worst_offdiagonal;
    /// First diagonal entry that vanishes (exactly, or within abs_eps).
    std::optional<std::size_t> zero_diagonal;
};

/// Gram matrix <sigma, P_i P_j>. Passes iff every off-diagonal entry is
/// zero (exact mode) or within abs_eps + rel_eps * sqrt(|G_ii G_jj|)
/// (floating mode), and no diagonal entry vanishes.
GramReport gram_check(std::span<const Polynomial> polys, const MomentSequence& g,
                      const Tolerance& tol = Tolerance::default_tolerance());

} // namespace umbral

#endif // UMBRAL_ORTHOPOLY_HPP
