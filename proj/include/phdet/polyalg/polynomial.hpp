#pragma once

#include "phdet/polyalg/monomial.hpp"
#include "phdet/polyalg/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

namespace phdet {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map ordered by degrevlex, largest monomial first, and
/// zero coefficients are never stored. Every polynomial carries its
/// VariableList; binary operations require identical lists.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, DegRevLexGreater>;

    Polynomial() = default;
    explicit Polynomial(VariableList vars) : vars_(std::move(vars)) {}

    static Polynomial constant(VariableList vars, const Rational& c) {
        Polynomial p(std::move(vars));
        if (c != 0) p.terms_.emplace(Monomial(p.vars_.size()), c);
        return p;
    }

    static Polynomial variable(VariableList vars, std::size_t index) {
        if (index >= vars.size()) throw std::out_of_range("variable index out of range");
        Polynomial p(std::move(vars));
        p.terms_.emplace(Monomial::variable(p.vars_.size(), index), Rational(1));
        return p;
    }

    static Polynomial term(VariableList vars, Monomial m, const Rational& c) {
        if (m.size() != vars.size()) throw std::invalid_argument("monomial length does not match variables");
        Polynomial p(std::move(vars));
        if (c != 0) p.terms_.emplace(std::move(m), c);
        return p;
    }

    const VariableList& variables() const noexcept { return vars_; }
    std::size_t nvars() const noexcept { return vars_.size(); }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    /// Total degree; -1 for the zero polynomial.
    long degree() const noexcept {
        if (terms_.empty()) return -1;
        return static_cast<long>(terms_.begin()->first.degree());
    }

    Rational constant_term() const {
        auto it = terms_.find(Monomial(nvars()));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        auto d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    /// Adds c*m in place.
    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_same_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        require_same_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    Polynomial& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [m, c] : terms_) c *= s;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend Polynomial operator-(Polynomial a) {
        for (auto& [m, c] : a.terms_) c = -c;
        return a;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same_ring(b);
        Polynomial r(a.vars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(unsigned e) const {
        Polynomial result = constant(vars_, 1);
        Polynomial base = *this;
        while (e != 0) {
            if (e & 1u) result *= base;
            e >>= 1;
            if (e != 0) base *= base;
        }
        return result;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    /// Exact substitution of a rational point.
    Rational evaluate(std::span<const Rational> point) const {
        if (point.size() != nvars())
            throw std::invalid_argument("point has " + std::to_string(point.size()) + " coordinates, expected " +
                                        std::to_string(nvars()));
        Rational sum = 0;
        for (const auto& [m, c] : terms_) {
            Rational v = c;
            for (std::size_t i = 0; i < m.size() && v != 0; ++i)
                if (m[i] != 0) v *= phdet::pow(point[i], m[i]);
            sum += v;
        }
        return sum;
    }

    Polynomial partial_derivative(std::size_t var_index) const {
        if (var_index >= nvars()) throw std::out_of_range("variable index out of range");
        Polynomial r(vars_);
        for (const auto& [m, c] : terms_) {
            auto e = m[var_index];
            if (e == 0) continue;
            r.add_term(m.with_exponent(var_index, e - 1), c * e);
        }
        return r;
    }

    /// Replaces variable `var_index` by the constant `value`.
    Polynomial substitute(std::size_t var_index, const Rational& value) const {
        if (var_index >= nvars()) throw std::out_of_range("variable index out of range");
        Polynomial r(vars_);
        for (const auto& [m, c] : terms_) {
            auto e = m[var_index];
            r.add_term(m.with_exponent(var_index, 0), e == 0 ? c : c * phdet::pow(value, e));
        }
        return r;
    }

    /// Re-expresses the polynomial over a different variable list. Every
    /// variable actually used must exist in `target` under the same name.
    Polynomial over(const VariableList& target) const {
        if (target == vars_) return *this;
        std::vector<std::size_t> map(nvars());
        std::vector<bool> used(nvars(), false);
        for (const auto& [m, c] : terms_)
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] != 0) used[i] = true;
        for (std::size_t i = 0; i < nvars(); ++i) {
            if (!used[i]) continue;
            auto j = target.index_of(vars_[i]);
            if (!j) throw std::invalid_argument("variable '" + vars_[i] + "' missing from target ring");
            map[i] = *j;
        }
        Polynomial r(target);
        for (const auto& [m, c] : terms_) {
            std::vector<Monomial::Exponent> e(target.size(), 0);
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] != 0) e[map[i]] = m[i];
            r.add_term(Monomial(std::move(e)), c);
        }
        return r;
    }

    /// Canonical text form, parseable by parse_polynomial.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) out += '-';
            } else {
                out += c < 0 ? " - " : " + ";
            }
            first = false;
            if (m.is_one()) {
                out += phdet::to_string(mag);
            } else {
                if (mag != 1) out += phdet::to_string(mag) + "*";
                out += m.to_string(vars_);
            }
        }
        return out;
    }

private:
    void require_same_ring(const Polynomial& o) const {
        if (!(vars_ == o.vars_)) throw std::invalid_argument("polynomials over different variable lists");
    }

    VariableList vars_;
    TermMap terms_;
};

}  // namespace phdet
