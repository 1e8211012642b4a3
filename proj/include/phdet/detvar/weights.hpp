#pragma once

#include "phdet/polyalg/polynomial.hpp"

#include <optional>
#include <vector>

namespace phdet {

namespace detail {

// Phase-1 simplex with Bland's rule: finds v >= 0 with A v = b, or nullopt.
inline std::optional<std::vector<Rational>> feasible_nonnegative(std::vector<std::vector<Rational>> a,
                                                                 std::vector<Rational> b) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a.front().size();
    if (m == 0) return std::vector<Rational>{};
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0) {
            for (auto& x : a[i]) x = -x;
            b[i] = -b[i];
        }
    }
    // Tableau columns: n structural, m artificial, then rhs.
    const std::size_t cols = n + m + 1;
    std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(cols, 0));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = 1;
        t[i][cols - 1] = b[i];
        basis[i] = n + i;
    }
    // Cost row for minimizing the artificial sum, expressed in non-basic terms.
    for (std::size_t j = 0; j < cols; ++j) {
        if (j >= n && j < n + m) continue;
        Rational s = 0;
        for (std::size_t i = 0; i < m; ++i) s += t[i][j];
        t[m][j] = -s;
    }
    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j + 1 < cols; ++j) {
            if (t[m][j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;
        std::size_t leave = m;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][cols - 1] / t[i][enter];
            if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) break;  // unbounded direction; cannot happen for phase 1
        Rational piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rational f = t[i][enter];
            for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    if (t[m][cols - 1] != 0) return std::nullopt;
    std::vector<Rational> v(n, 0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) v[basis[i]] = t[i][cols - 1];
    return v;
}

}  // namespace detail

/// Strictly positive integer weights making every generator weighted
/// homogeneous, if such weights exist.
inline std::optional<std::vector<Integer>> positive_homogeneity_weights(const std::vector<Polynomial>& gens,
                                                                        std::size_t nvars) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& g : gens) {
        if (g.term_count() < 2) continue;
        const Monomial& first = g.terms().begin()->first;
        for (auto it = std::next(g.terms().begin()); it != g.terms().end(); ++it) {
            std::vector<Rational> row(nvars);
            for (std::size_t i = 0; i < nvars; ++i)
                row[i] = Rational(static_cast<long long>(it->first[i])) - Rational(static_cast<long long>(first[i]));
            rows.push_back(std::move(row));
        }
    }
    // w = 1 + v with v >= 0, so A v = -A 1.
    std::vector<Rational> rhs(rows.size(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& x : rows[i]) rhs[i] -= x;
    auto v = detail::feasible_nonnegative(rows, rhs);
    if (!v) return std::nullopt;
    std::vector<Rational> w(nvars, 1);
    for (std::size_t i = 0; i < v->size(); ++i) w[i] += (*v)[i];
    Integer den_lcm = 1;
    for (const auto& x : w) den_lcm = boost::multiprecision::lcm(den_lcm, denominator_of(x));
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto& x : w) {
        out.push_back(numerator_of(x * den_lcm));
        g = boost::multiprecision::gcd(g, out.back());
    }
    for (auto& x : out) x /= g;
    return out;
}

/// True when every generator is homogeneous for the given weights.
inline bool is_weighted_homogeneous(const std::vector<Polynomial>& gens, const std::vector<long long>& weights) {
    for (const auto& g : gens) {
        std::optional<long long> deg;
        for (const auto& [m, c] : g.terms()) {
            long long d = 0;
            for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<long long>(m[i]) * weights.at(i);
            if (deg && *deg != d) return false;
            deg = d;
        }
    }
    return true;
}

}  // namespace phdet
