#pragma once

#include "phdet/error.hpp"
#include "phdet/grobner/buchberger.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace phdet {

/// Rational roots of a univariate polynomial given by coefficients
/// (index = degree). `complete` is false when irrational or non-real roots
/// remain after deflation.
struct UnivariateRoots {
    std::vector<Rational> roots;  // ascending, without multiplicity
    bool complete = true;
};

namespace detail {

inline std::vector<std::uint64_t> divisors_of(const Integer& z) {
    Integer a = abs(z);
    if (a > Integer(1'000'000'000'000ULL)) throw UnsupportedError("coefficient too large for rational root search");
    auto n = a.convert_to<std::uint64_t>();
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline Rational eval_univariate(const std::vector<Rational>& c, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

// Divides by (x - r); r must be a root.
inline std::vector<Rational> deflate(const std::vector<Rational>& c, const Rational& r) {
    std::vector<Rational> q(c.size() - 1);
    Rational carry = 0;
    for (std::size_t i = c.size(); i-- > 1;) {
        carry = carry * r + c[i];
        q[i - 1] = carry;
    }
    return q;
}

inline void trim(std::vector<Rational>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace detail

inline UnivariateRoots rational_roots(std::vector<Rational> coeffs) {
    detail::trim(coeffs);
    if (coeffs.empty()) throw std::invalid_argument("roots of the zero polynomial");
    UnivariateRoots out;
    if (coeffs[0] == 0) {
        out.roots.push_back(0);
        while (!coeffs.empty() && coeffs[0] == 0) coeffs.erase(coeffs.begin());
    }
    if (coeffs.size() > 1) {
        Integer den_lcm = 1;
        for (const auto& c : coeffs) den_lcm = boost::multiprecision::lcm(den_lcm, denominator_of(c));
        const Integer a0 = numerator_of(coeffs.front() * den_lcm);
        const Integer an = numerator_of(coeffs.back() * den_lcm);
        for (auto p : detail::divisors_of(a0)) {
            for (auto q : detail::divisors_of(an)) {
                for (int sign : {1, -1}) {
                    if (coeffs.size() <= 1) break;
                    Rational cand = Rational(Integer(p) * sign, Integer(q));
                    if (std::find(out.roots.begin(), out.roots.end(), cand) != out.roots.end()) continue;
                    if (detail::eval_univariate(coeffs, cand) != 0) continue;
                    out.roots.push_back(cand);
                    while (coeffs.size() > 1 && detail::eval_univariate(coeffs, cand) == 0)
                        coeffs = detail::deflate(coeffs, cand);
                }
            }
        }
    }
    out.complete = coeffs.size() <= 1;
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

/// Finite set of rational points of a zero-dimensional ideal.
struct RationalPoints {
    std::vector<std::vector<Rational>> points;
    /// False when some points of the zero set are not rational.
    bool complete = true;
};

namespace detail {

inline void solve_recursive(const VariableList& vars, std::vector<Polynomial> gens,
                            std::vector<std::optional<Rational>>& assignment, RationalPoints& out,
                            const BuchbergerOptions& options) {
    std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
    for (const auto& g : gens)
        if (g.is_constant()) return;

    std::optional<std::size_t> last_free;
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (!assignment[i]) last_free = i;
    if (!last_free) {
        std::vector<Rational> point;
        for (const auto& a : assignment) point.push_back(*a);
        out.points.push_back(std::move(point));
        return;
    }
    if (gens.empty()) throw UnsupportedError("zero set is not zero-dimensional");

    const GroebnerBasis gb = buchberger(Ideal(vars, gens), MonomialOrder::lex(vars.size()), options);
    if (gb.is_unit_ideal()) return;
    const std::size_t v = *last_free;
    std::vector<bool> only_v(vars.size(), false);
    only_v[v] = true;
    const Polynomial* eliminant = nullptr;
    for (const auto& g : gb.polynomials()) {
        bool univariate = true;
        for (const auto& [m, c] : g.terms()) univariate = univariate && m.supported_in(only_v);
        if (univariate) {
            eliminant = &g;
            break;
        }
    }
    if (eliminant == nullptr) throw UnsupportedError("zero set is not zero-dimensional");

    std::vector<Rational> coeffs(static_cast<std::size_t>(eliminant->degree()) + 1);
    for (const auto& [m, c] : eliminant->terms()) coeffs[m[v]] = c;
    UnivariateRoots roots = rational_roots(std::move(coeffs));
    if (!roots.complete) out.complete = false;
    for (const auto& r : roots.roots) {
        std::vector<Polynomial> reduced;
        for (const auto& g : gb.polynomials()) reduced.push_back(g.substitute(v, r));
        assignment[v] = r;
        solve_recursive(vars, std::move(reduced), assignment, out, options);
        assignment[v].reset();
    }
}

}  // namespace detail

/// Rational points of V(I). Throws UnsupportedError when V(I) is infinite.
/// Variables listed in `fixed` are pinned to the given values first.
inline RationalPoints rational_points(const Ideal& ideal, std::vector<std::optional<Rational>> fixed = {},
                                      BuchbergerOptions options = {}) {
    const auto& vars = ideal.variables();
    if (fixed.empty()) fixed.resize(vars.size());
    if (fixed.size() != vars.size()) throw std::invalid_argument("assignment length does not match variables");
    std::vector<Polynomial> gens;
    for (auto g : ideal.generators()) {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (fixed[i]) g = g.substitute(i, *fixed[i]);
        gens.push_back(std::move(g));
    }
    RationalPoints out;
    detail::solve_recursive(vars, std::move(gens), fixed, out, options);
    std::sort(out.points.begin(), out.points.end());
    return out;
}

}  // namespace phdet
