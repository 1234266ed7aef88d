#include "umbral/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace umbral {

namespace {

using RatMat = std::vector<std::vector<mpq_class>>;
using CMat = Eigen::MatrixXcd;

RatMat to_rational(const Matrix& a)
{
    RatMat m(a.rows(), std::vector<mpq_class>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m[i][j] = a(i, j).as_rational();
    return m;
}

CMat to_eigen(const Matrix& a)
{
    CMat m(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j).as_complex();
    return m;
}

mpq_class bareiss_determinant(RatMat m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    mpq_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    mpq_class d = m[n - 1][n - 1];
    return sign > 0 ? d : mpq_class(-d);
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMat& m, std::size_t ncols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    const std::size_t nrows = m.size();
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t p = row;
        while (p < nrows && m[p][col] == 0)
            ++p;
        if (p == nrows)
            continue;
        std::swap(m[row], m[p]);
        mpq_class inv = 1 / m[row][col];
        for (auto& v : m[row])
            v *= inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == row || m[i][col] == 0)
                continue;
            mpq_class f = m[i][col];
            for (std::size_t j = col; j < m[i].size(); ++j)
                m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, Mode mode)
    : rows_(rows), cols_(cols), mode_(mode), data_(rows * cols, Scalar::zero(mode))
{
}

Matrix Matrix::leading(std::size_t k) const
{
    Matrix out(k, k, mode_);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            out(i, j) = (*this)(i, j);
    return out;
}

Scalar determinant(const Matrix& a)
{
    if (a.rows() != a.cols())
        throw Error("determinant of a non-square matrix");
    if (a.mode() == Mode::exact)
        return Scalar(bareiss_determinant(to_rational(a)));
    if (a.rows() == 0)
        return Scalar::one(Mode::floating);
    return Scalar(to_eigen(a).partialPivLu().determinant());
}

std::vector<Scalar> leading_principal_minors(const Matrix& a)
{
    const std::size_t n = a.rows();
    std::vector<Scalar> out;
    out.reserve(n);
    if (a.mode() == Mode::floating) {
        for (std::size_t k = 1; k <= n; ++k)
            out.push_back(determinant(a.leading(k)));
        return out;
    }
    // Without pivoting, the k-th Bareiss pivot equals the k-th leading minor.
    RatMat m = to_rational(a);
    mpq_class prev = 1;
    std::size_t k = 0;
    for (; k < n; ++k) {
        if (m[k][k] == 0)
            break;
        out.emplace_back(m[k][k]);
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    for (; k < n; ++k)
        out.push_back(determinant(a.leading(k + 1)));
    return out;
}

std::vector<Scalar> solve(const Matrix& a, const std::vector<Scalar>& b)
{
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n)
        throw Error("solve: dimension mismatch");
    if (a.mode() == Mode::exact) {
        RatMat m = to_rational(a);
        for (std::size_t i = 0; i < n; ++i)
            m[i].push_back(b[i].as_rational());
        auto piv = rref(m, n);
        if (piv.size() != n)
            throw Error("solve: singular system");
        std::vector<Scalar> x;
        x.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            x.emplace_back(m[i][n]);
        return x;
    }
    CMat m = to_eigen(a);
    Eigen::VectorXcd rhs(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        rhs(static_cast<Eigen::Index>(i)) = b[i].as_complex();
    auto lu = m.partialPivLu();
    if (n > 0 && lu.determinant() == std::complex<double>(0.0, 0.0))
        throw Error("solve: singular system");
    Eigen::VectorXcd sol = lu.solve(rhs);
    std::vector<Scalar> x;
    x.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        x.emplace_back(sol(static_cast<Eigen::Index>(i)));
    return x;
}

NullspaceResult nullspace(const Matrix& a, const Tolerance& tol)
{
    NullspaceResult res;
    const std::size_t nc = a.cols();
    if (a.mode() == Mode::exact) {
        RatMat m = to_rational(a);
        auto piv = rref(m, nc);
        res.rank = piv.size();
        std::vector<bool> is_pivot(nc, false);
        for (auto c : piv)
            is_pivot[c] = true;
        for (std::size_t free = 0; free < nc; ++free) {
            if (is_pivot[free])
                continue;
            std::vector<Scalar> v(nc, Scalar::zero(Mode::exact));
            v[free] = Scalar::one(Mode::exact);
            for (std::size_t r = 0; r < piv.size(); ++r)
                v[piv[r]] = Scalar(mpq_class(-m[r][free]));
            res.basis.push_back(std::move(v));
        }
        return res;
    }
    CMat m = to_eigen(a);
    Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double smax = s.size() > 0 ? s(0) : 0.0;
    const double cut = std::max(tol.abs_eps, tol.rel_eps * smax);
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > cut)
            ++rank;
    res.rank = rank;
    res.condition = rank > 0 ? smax / s(static_cast<Eigen::Index>(rank - 1)) : 1.0;
    const auto& v = svd.matrixV();
    for (std::size_t k = rank; k < nc; ++k) {
        std::vector<Scalar> vec;
        vec.reserve(nc);
        for (std::size_t i = 0; i < nc; ++i)
            vec.emplace_back(v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)));
        res.basis.push_back(std::move(vec));
    }
    return res;
}

OverdeterminedSolution solve_overdetermined(const Matrix& a, const std::vector<Scalar>& b,
                                            const Tolerance& tol)
{
    OverdeterminedSolution out;
    const std::size_t nr = a.rows(), nc = a.cols();
    if (b.size() != nr)
        throw Error("solve_overdetermined: dimension mismatch");
    if (a.mode() == Mode::exact) {
        RatMat m = to_rational(a);
        for (std::size_t i = 0; i < nr; ++i)
            m[i].push_back(b[i].as_rational());
        auto piv = rref(m, nc + 1);
        out.consistent = piv.empty() || piv.back() != nc;
        out.rank = out.consistent ? piv.size() : piv.size() - 1;
        out.x.assign(nc, Scalar::zero(Mode::exact));
        if (out.consistent)
            for (std::size_t r = 0; r < piv.size(); ++r)
                out.x[piv[r]] = Scalar(m[r][nc]);
    } else {
        CMat m = to_eigen(a);
        Eigen::VectorXcd rhs(static_cast<Eigen::Index>(nr));
        for (std::size_t i = 0; i < nr; ++i)
            rhs(static_cast<Eigen::Index>(i)) = b[i].as_complex();
        auto qr = m.colPivHouseholderQr();
        qr.setThreshold(std::max(tol.rel_eps, 1e-14));
        Eigen::VectorXcd sol = qr.solve(rhs);
        out.rank = static_cast<std::size_t>(qr.rank());
        for (std::size_t i = 0; i < nc; ++i)
            out.x.emplace_back(sol(static_cast<Eigen::Index>(i)));
        const double scale = rhs.cwiseAbs().maxCoeff();
        const double res = (m * sol - rhs).cwiseAbs().maxCoeff();
        out.consistent = res <= tol.abs_eps + tol.rel_eps * scale;
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < nr; ++i) {
        Scalar r = -b[i];
        for (std::size_t j = 0; j < nc; ++j)
            r += a(i, j) * out.x[j];
        worst = std::max(worst, r.magnitude());
    }
    out.max_residual = worst;
    return out;
}

} // namespace umbral

namespace umbral {

std::vector<std::complex<double>> polynomial_roots(std::span<const std::complex<double>> c)
{
    std::size_t r = c.size();
    while (r > 0 && c[r - 1] == std::complex<double>(0.0))
        --r;
    if (r <= 1)
        return {};
    const std::size_t deg = r - 1;
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(deg),
                                                   static_cast<Eigen::Index>(deg));
    for (std::size_t i = 1; i < deg; ++i)
        comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
    for (std::size_t i = 0; i < deg; ++i)
        comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(deg - 1)) = -c[i] / c[deg];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    if (es.info() != Eigen::Success)
        throw ConvergenceError("companion eigenvalue iteration did not converge");
    std::vector<std::complex<double>> out;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        out.push_back(es.eigenvalues()(i));
    return out;
}

} // namespace umbral
