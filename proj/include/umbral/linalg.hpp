#ifndef UMBRAL_LINALG_HPP
#define UMBRAL_LINALG_HPP

#include <cstddef>
#include <complex>
#include <span>
#include <vector>

#include "umbral/scalar.hpp"

namespace umbral {

/// Small dense row-major matrix of Scalars. Exact-mode routines use
/// rational elimination; floating-mode routines delegate to Eigen.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, Mode mode);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Mode mode() const noexcept { return mode_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Leading k x k block.
    Matrix leading(std::size_t k) const;

private:
    std::size_t rows_, cols_;
    Mode mode_;
    std::vector<Scalar> data_;
};

/// Fraction-free (Bareiss) elimination in exact mode, partial-pivot LU
/// in floating mode.
Scalar determinant(const Matrix& a);

/// Δ_1..Δ_n of a square matrix. Exact mode runs one pivot-free Bareiss
/// sweep whose pivots are the leading minors, falling back to
/// individual determinants after the first zero pivot.
std::vector<Scalar> leading_principal_minors(const Matrix& a);

/// Solves a x = b for square nonsingular a; throws Error if singular.
std::vector<Scalar> solve(const Matrix& a, const std::vector<Scalar>& b);

struct NullspaceResult {
    std::vector<std::vector<Scalar>> basis;
    std::size_t rank = 0;
    /// sigma_max / sigma_rank in floating mode; 1 in exact mode.
    double condition = 1.0;
};

/// Exact reduced row echelon form in exact mode; SVD rank decision
/// (sigma <= max(abs_eps, rel_eps * sigma_max) counts as zero) in
/// floating mode.
NullspaceResult nullspace(const Matrix& a, const Tolerance& tol);

struct OverdeterminedSolution {
    std::vector<Scalar> x;
    bool consistent = false;
    std::size_t rank = 0;
    /// max_i |(a x - b)_i|
    double max_residual = 0.0;
};

/// Exact: consistency of [a | b] via RREF (free variables set to 0).
/// Floating: least squares with a relative residual check.
OverdeterminedSolution solve_overdetermined(const Matrix& a, const std::vector<Scalar>& b,
                                            const Tolerance& tol);

/// Roots of c[0] + c[1] z + ... + c[r] z^r (c[r] != 0), as eigenvalues of
/// the companion matrix.
std::vector<std::complex<double>> polynomial_roots(std::span<const std::complex<double>> c);

} // namespace umbral

#endif // UMBRAL_LINALG_HPP
