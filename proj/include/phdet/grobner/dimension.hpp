#pragma once

#include "phdet/grobner/buchberger.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace phdet {

/// Krull dimension of V(I) read off the leading monomials: the largest set S
/// of variables such that no leading monomial lives purely in S. The unit
/// ideal (empty zero set) has dimension -1.
inline int dimension_from_basis(const GroebnerBasis& gb) {
    if (gb.is_unit_ideal()) return -1;
    const std::size_t n = gb.variables().size();
    if (n > 24) throw UnsupportedError("dimension computation limited to 24 variables");
    const auto lms = gb.leading_monomials();
    std::vector<std::uint32_t> supports;
    supports.reserve(lms.size());
    for (const auto& m : lms) {
        std::uint32_t mask = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (m[i] != 0) mask |= (1u << i);
        supports.push_back(mask);
    }
    int best = 0;
    const std::uint32_t limit = 1u << n;
    for (std::uint32_t s = 0; s < limit; ++s) {
        int size = __builtin_popcount(s);
        if (size <= best) continue;
        bool independent = true;
        for (auto mask : supports) {
            if ((mask & ~s) == 0) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

inline int ideal_dimension(const Ideal& ideal, const MonomialOrder& order, BuchbergerOptions options = {}) {
    return dimension_from_basis(buchberger(ideal, order, options));
}

/// Standard monomials (those outside the leading term ideal), or nullopt when
/// there are infinitely many. The unit ideal has none.
inline std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis& gb) {
    std::vector<Monomial> out;
    if (gb.is_unit_ideal()) return out;
    const std::size_t n = gb.variables().size();
    const auto lms = gb.leading_monomials();
    for (std::size_t v = 0; v < n; ++v) {
        bool has_pure_power = false;
        for (const auto& m : lms) {
            bool pure = m[v] != 0;
            for (std::size_t i = 0; i < n && pure; ++i)
                if (i != v && m[i] != 0) pure = false;
            if (pure) {
                has_pure_power = true;
                break;
            }
        }
        if (!has_pure_power) return std::nullopt;
    }
    auto in_lead_ideal = [&](const Monomial& m) {
        for (const auto& lm : lms)
            if (lm.divides(m)) return true;
        return false;
    };
    // Depth-first walk of the staircase; the complement of a monomial ideal is
    // closed under division, so a divisible monomial prunes its branch.
    std::vector<Monomial::Exponent> exps(n, 0);
    auto walk = [&](auto&& self, std::size_t var) -> void {
        if (var == n) {
            out.emplace_back(exps);
            return;
        }
        for (Monomial::Exponent e = 0;; ++e) {
            exps[var] = e;
            if (in_lead_ideal(Monomial(exps))) break;
            self(self, var + 1);
        }
        exps[var] = 0;
    };
    walk(walk, 0);
    return out;
}

/// dim_Q Q[x]/I when finite, nullopt when infinite.
inline std::optional<std::size_t> quotient_dimension(const GroebnerBasis& gb) {
    auto sm = standard_monomials(gb);
    if (!sm) return std::nullopt;
    return sm->size();
}

inline std::optional<std::size_t> quotient_dimension(const Ideal& ideal, const MonomialOrder& order,
                                                     BuchbergerOptions options = {}) {
    return quotient_dimension(buchberger(ideal, order, options));
}

}  // namespace phdet
