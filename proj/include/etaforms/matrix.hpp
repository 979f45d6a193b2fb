#pragma once

#include "etaforms/cyclotomic.hpp"

#include <complex>
#include <stdexcept>
#include <vector>

namespace etaforms {

/// Small dense matrix over Q(zeta_8); exact arithmetic throughout.
class CycMatrix {
public:
    CycMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    CycNum& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const CycNum& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    static CycMatrix identity(std::size_t n) {
        CycMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = CycNum(1);
        return m;
    }

    CycMatrix operator*(const CycMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("CycMatrix: shape mismatch");
        CycMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const CycNum& x = at(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const CycNum& y = o.at(k, j);
                    if (!y.is_zero()) r.at(i, j) += x * y;
                }
            }
        return r;
    }

    CycNum trace() const {
        CycNum t;
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
        return t;
    }

    /// Row echelon form in place; returns the rank and records pivot columns.
    std::size_t row_reduce(std::vector<std::size_t>* pivot_cols = nullptr) {
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
            std::size_t piv = rank;
            while (piv < rows_ && at(piv, col).is_zero()) ++piv;
            if (piv == rows_) continue;
            if (piv != rank)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(piv, j), at(rank, j));
            CycNum inv = at(rank, col).inverse();
            for (std::size_t j = col; j < cols_; ++j)
                if (!at(rank, j).is_zero()) at(rank, j) = inv * at(rank, j);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == rank || at(i, col).is_zero()) continue;
                CycNum f = at(i, col);
                for (std::size_t j = col; j < cols_; ++j) {
                    if (at(rank, j).is_zero()) continue;
                    at(i, j) -= f * at(rank, j);
                }
            }
            if (pivot_cols) pivot_cols->push_back(col);
            ++rank;
        }
        return rank;
    }

private:
    std::size_t rows_, cols_;
    std::vector<CycNum> a_;
};

/// Kernel basis of a square-or-rectangular matrix, as column vectors.
inline std::vector<std::vector<CycNum>> kernel_basis(CycMatrix m) {
    const std::size_t n = m.cols();
    std::vector<std::size_t> pivots;
    m.row_reduce(&pivots);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<CycNum>> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<CycNum> v(n);
        v[free_col] = CycNum(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Characteristic polynomial via Faddeev-LeVerrier, low-to-high; exact in
/// characteristic zero.  Returns n+1 coefficients with leading 1.
inline std::vector<CycNum> char_poly(const CycMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: square matrix required");
    const std::size_t n = m.rows();
    std::vector<CycNum> coeff(n + 1);
    coeff[n] = CycNum(1);
    CycMatrix mk = CycMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        CycNum ck = mk.trace();
        ck = ck * CycNum(Rat(Bigint(-1), Bigint(static_cast<long long>(k))));
        coeff[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += ck;
    }
    return coeff;
}

/// Durand-Kerner roots of a monic polynomial with exact coefficients,
/// evaluated in double precision.  Degree is small (<= 8 here).
inline std::vector<std::complex<double>> poly_roots(const std::vector<CycNum>& coeff) {
    const std::size_t n = coeff.size() - 1;
    std::vector<std::complex<double>> c(coeff.size());
    for (std::size_t k = 0; k < coeff.size(); ++k) c[k] = coeff[k].to_complex();
    std::vector<std::complex<double>> roots(n);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> acc(1.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        acc *= seed;
        roots[k] = acc;
    }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> v = c[n];
        for (std::size_t k = n; k-- > 0;) v = v * x + c[k];
        return v;
    };
    for (int iter = 0; iter < 300; ++iter) {
        double delta = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            std::complex<double> d(1.0, 0.0);
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) d *= roots[k] - roots[j];
            std::complex<double> step = eval(roots[k]) / d;
            roots[k] -= step;
            delta += std::abs(step);
        }
        if (delta < 1e-14) break;
    }
    return roots;
}

} // namespace etaforms
