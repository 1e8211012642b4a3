#pragma once

#include "phdet/error.hpp"
#include "phdet/grobner/ideal.hpp"
#include "phdet/grobner/order.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace phdet {

namespace detail {

using Term = std::pair<Monomial, Rational>;
using SortedTerms = std::vector<Term>;  // largest monomial first
using WorkPoly = std::map<Monomial, Rational, OrderGreater>;

inline SortedTerms sort_terms(const Polynomial& p, const MonomialOrder& order) {
    SortedTerms out(p.terms().begin(), p.terms().end());
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return order.compare(a.first, b.first) > 0; });
    return out;
}

inline Polynomial to_polynomial(const VariableList& vars, const SortedTerms& terms) {
    Polynomial p(vars);
    for (const auto& [m, c] : terms) p.add_term(m, c);
    return p;
}

inline void make_monic(SortedTerms& f) {
    if (f.empty()) return;
    Rational inv = Rational(1) / f.front().second;
    for (auto& t : f) t.second *= inv;
}

// w -= c * m * g
inline void subtract_scaled(WorkPoly& w, const Rational& c, const Monomial& m, const SortedTerms& g) {
    for (const auto& [gm, gc] : g) {
        Monomial key = m * gm;
        Rational delta = c * gc;
        auto [it, inserted] = w.try_emplace(key, -delta);
        if (!inserted) {
            it->second -= delta;
            if (it->second == 0) w.erase(it);
        }
    }
}

// Complete reduction of f by `basis`; divisors are tried in basis order.
inline SortedTerms reduce(const SortedTerms& f, const std::vector<SortedTerms>& basis, const MonomialOrder& order) {
    WorkPoly work(OrderGreater{&order});
    for (const auto& t : f) work.emplace(t.first, t.second);
    SortedTerms remainder;
    while (!work.empty()) {
        auto lead = work.begin();
        const SortedTerms* divisor = nullptr;
        for (const auto& g : basis) {
            if (!g.empty() && g.front().first.divides(lead->first)) {
                divisor = &g;
                break;
            }
        }
        if (divisor == nullptr) {
            remainder.push_back(*lead);
            work.erase(lead);
            continue;
        }
        Monomial m = lead->first / divisor->front().first;
        Rational c = lead->second / divisor->front().second;
        subtract_scaled(work, c, m, *divisor);
    }
    return remainder;
}

inline SortedTerms s_polynomial(const SortedTerms& f, const SortedTerms& g, const MonomialOrder& order) {
    const Monomial l = lcm(f.front().first, g.front().first);
    WorkPoly work(OrderGreater{&order});
    subtract_scaled(work, -(Rational(1) / f.front().second), l / f.front().first, f);
    subtract_scaled(work, Rational(1) / g.front().second, l / g.front().first, g);
    return SortedTerms(work.begin(), work.end());
}

}  // namespace detail

struct BuchbergerOptions {
    /// Maximum number of S-polynomials reduced before giving up.
    std::size_t spair_budget = 100000;
};

/// Reduced, monic Groebner basis, sorted by leading monomial (largest first).
class GroebnerBasis {
public:
    GroebnerBasis(VariableList vars, MonomialOrder order, std::vector<detail::SortedTerms> basis)
        : vars_(std::move(vars)), order_(std::move(order)), sorted_(std::move(basis)) {
        polys_.reserve(sorted_.size());
        for (const auto& g : sorted_) polys_.push_back(detail::to_polynomial(vars_, g));
    }

    const VariableList& variables() const noexcept { return vars_; }
    const MonomialOrder& order() const noexcept { return order_; }
    const std::vector<Polynomial>& polynomials() const noexcept { return polys_; }
    std::size_t size() const noexcept { return polys_.size(); }
    bool is_zero_ideal() const noexcept { return polys_.empty(); }

    bool is_unit_ideal() const noexcept {
        return sorted_.size() == 1 && sorted_.front().front().first.is_one();
    }

    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> out;
        out.reserve(sorted_.size());
        for (const auto& g : sorted_) out.push_back(g.front().first);
        return out;
    }

    Polynomial normal_form(const Polynomial& f) const {
        if (!(f.variables() == vars_)) throw std::invalid_argument("polynomial over a different variable list");
        return detail::to_polynomial(vars_, detail::reduce(detail::sort_terms(f, order_), sorted_, order_));
    }

    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

    const std::vector<detail::SortedTerms>& sorted_terms() const noexcept { return sorted_; }

private:
    VariableList vars_;
    MonomialOrder order_;
    std::vector<detail::SortedTerms> sorted_;
    std::vector<Polynomial> polys_;
};

/// S-polynomial of two nonzero polynomials under `order`.
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of the zero polynomial");
    return detail::to_polynomial(f.variables(),
                                 detail::s_polynomial(detail::sort_terms(f, order), detail::sort_terms(g, order), order));
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree, ties by pair creation order) and the coprime leading monomial
/// criterion. Throws ResourceError when the S-pair budget is exhausted.
inline GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, BuchbergerOptions options = {}) {
    using detail::SortedTerms;
    if (order.nvars() != ideal.nvars()) throw std::invalid_argument("monomial order and ideal disagree on variable count");

    std::vector<SortedTerms> basis;
    for (const auto& g : ideal.generators()) {
        SortedTerms s = detail::sort_terms(g, order);
        detail::make_monic(s);
        basis.push_back(std::move(s));
    }

    struct Pair {
        std::size_t i, j;
        std::uint64_t lcm_degree;
        std::size_t seq;
    };
    std::vector<Pair> pairs;
    std::size_t seq = 0;
    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            auto d = lcm(basis[i].front().first, basis[j].front().first).degree();
            pairs.push_back({i, j, d, seq++});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

    std::size_t reductions = 0;
    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
            return a.lcm_degree != b.lcm_degree ? a.lcm_degree < b.lcm_degree : a.seq < b.seq;
        });
        Pair p = *best;
        pairs.erase(best);
        if (basis[p.i].front().first.coprime_with(basis[p.j].front().first)) continue;
        if (++reductions > options.spair_budget)
            throw ResourceError("Groebner basis computation exceeded the S-pair budget of " +
                                std::to_string(options.spair_budget));
        SortedTerms h = detail::reduce(detail::s_polynomial(basis[p.i], basis[p.j], order), basis, order);
        if (h.empty()) continue;
        detail::make_monic(h);
        if (h.front().first.is_one()) {
            basis.assign(1, std::move(h));
            pairs.clear();
            break;
        }
        basis.push_back(std::move(h));
        add_pairs_for(basis.size() - 1);
    }

    // Minimalize: drop elements whose leading monomial is divisible by another's.
    std::vector<SortedTerms> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto& li = basis[i].front().first;
            const auto& lj = basis[j].front().first;
            if (lj.divides(li) && (!(li == lj) || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Inter-reduce the tails.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<SortedTerms> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        SortedTerms tail(minimal[i].begin() + 1, minimal[i].end());
        SortedTerms reduced_tail = detail::reduce(tail, others, order);
        SortedTerms g;
        g.reserve(1 + reduced_tail.size());
        g.push_back(minimal[i].front());
        g.insert(g.end(), reduced_tail.begin(), reduced_tail.end());
        minimal[i] = std::move(g);
    }
    std::sort(minimal.begin(), minimal.end(), [&](const SortedTerms& a, const SortedTerms& b) {
        return order.compare(a.front().first, b.front().first) > 0;
    });
    return GroebnerBasis(ideal.variables(), order, std::move(minimal));
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) { return g.normal_form(f); }

}  // namespace phdet
