#pragma once

#include "phdet/polyalg/polynomial.hpp"

#include <cassert>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace phdet {

/// Exact division f / g in the polynomial ring. Throws if g does not divide f.
inline Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
    const auto& [lm_g, lc_g] = *g.terms().begin();
    Polynomial q(f.variables());
    Polynomial r = f;
    while (!r.is_zero()) {
        const auto& [lm_r, lc_r] = *r.terms().begin();
        if (!lm_g.divides(lm_r)) throw std::domain_error("polynomial division is not exact");
        Polynomial step = Polynomial::term(f.variables(), lm_r / lm_g, lc_r / lc_g);
        q += step;
        r -= step * g;
    }
    return q;
}

/// Dense rational rank by Gaussian elimination.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
    std::size_t rank = 0;
    std::size_t ncols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            Rational factor = rows[i][col] / rows[rank][col];
            for (std::size_t j = col; j < ncols; ++j) rows[i][j] -= factor * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// n x p matrix of polynomials over one shared variable list.
class PolyMatrix {
public:
    PolyMatrix(VariableList vars, std::size_t rows, std::size_t cols)
        : vars_(std::move(vars)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(vars_)) {}

    PolyMatrix(VariableList vars, std::vector<std::vector<Polynomial>> grid) : vars_(std::move(vars)) {
        rows_ = grid.size();
        cols_ = rows_ == 0 ? 0 : grid.front().size();
        if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("matrix must be non-empty");
        entries_.reserve(rows_ * cols_);
        for (auto& row : grid) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix rows");
            for (auto& e : row) {
                if (!(e.variables() == vars_)) throw std::invalid_argument("matrix entry over a different variable list");
                entries_.push_back(std::move(e));
            }
        }
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const VariableList& variables() const noexcept { return vars_; }

    const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }
    Polynomial& operator()(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }

    std::span<const Polynomial> entries() const noexcept { return entries_; }

    /// Rank of the rational matrix obtained by substituting `point`.
    std::size_t rank_at_point(std::span<const Rational> point) const {
        if (point.size() != vars_.size())
            throw std::invalid_argument("point has " + std::to_string(point.size()) + " coordinates, expected " +
                                        std::to_string(vars_.size()));
        std::vector<std::vector<Rational>> values(rows_, std::vector<Rational>(cols_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) values[i][j] = (*this)(i, j).evaluate(point);
        return rational_rank(std::move(values));
    }

private:
    VariableList vars_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Polynomial> entries_;
};

using PolySquare = std::vector<std::vector<Polynomial>>;

/// Laplace expansion along the first row.
inline Polynomial determinant_cofactor(const PolySquare& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("empty matrix");
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Polynomial det(m[0][0].variables());
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolySquare sub(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            sub[i - 1].reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) sub[i - 1].push_back(m[i][k]);
        }
        Polynomial term = m[0][j] * determinant_cofactor(sub);
        if (j % 2 == 0) det += term; else det -= term;
    }
    return det;
}

/// Fraction-free (Bareiss) elimination; every division is exact.
inline Polynomial determinant_bareiss(PolySquare m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("empty matrix");
    const VariableList vars = m[0][0].variables();
    bool negate = false;
    Polynomial prev = Polynomial::constant(vars, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Polynomial(vars);
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = divide_exact(num, prev);
            }
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

namespace detail {

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    do {
        out.push_back(idx);
    } while (next_combination(idx, n));
    return out;
}

}  // namespace detail

/// All size x size minors, ordered lexicographically by row set and then by
/// column set.
inline std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t size) {
    if (size < 1 || size > std::min(m.rows(), m.cols()))
        throw std::out_of_range("minor size " + std::to_string(size) + " out of range for a " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
    std::vector<Polynomial> out;
    const auto row_sets = detail::combinations(m.rows(), size);
    const auto col_sets = detail::combinations(m.cols(), size);
    for (const auto& rs : row_sets) {
        for (const auto& cs : col_sets) {
            PolySquare sub(size);
            for (std::size_t i = 0; i < size; ++i)
                for (std::size_t j = 0; j < size; ++j) sub[i].push_back(m(rs[i], cs[j]));
            Polynomial det = determinant_bareiss(sub);
            assert(det == determinant_cofactor(sub));
            out.push_back(std::move(det));
        }
    }
    return out;
}

}  // namespace phdet
