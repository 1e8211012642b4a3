#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace phdet {

/// Ordered, immutable list of variable names shared by the polynomials of
/// one ring. Copies share storage; equality compares names.
class VariableList {
public:
    VariableList() : names_(std::make_shared<const std::vector<std::string>>()) {}

    explicit VariableList(std::vector<std::string> names) {
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (!is_identifier(names[i]))
                throw std::invalid_argument("invalid variable name '" + names[i] + "'");
            for (std::size_t j = 0; j < i; ++j)
                if (names[j] == names[i])
                    throw std::invalid_argument("duplicate variable name '" + names[i] + "'");
        }
        names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
    }

    VariableList(std::initializer_list<std::string> names)
        : VariableList(std::vector<std::string>(names)) {}

    std::size_t size() const noexcept { return names_->size(); }
    const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const noexcept { return *names_; }
    auto begin() const noexcept { return names_->begin(); }
    auto end() const noexcept { return names_->end(); }

    std::optional<std::size_t> index_of(const std::string& name) const {
        auto it = std::find(names_->begin(), names_->end(), name);
        if (it == names_->end()) return std::nullopt;
        return static_cast<std::size_t>(it - names_->begin());
    }

    friend bool operator==(const VariableList& a, const VariableList& b) {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }

    static bool is_identifier(const std::string& s) {
        if (s.empty()) return false;
        auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
        if (!alpha(s[0])) return false;
        return std::all_of(s.begin(), s.end(),
                           [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); });
    }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

/// Exponent vector over a fixed variable list.
class Monomial {
public:
    using Exponent = std::uint32_t;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
    Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

    static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1) {
        Monomial m(nvars);
        m.exps_.at(index) = power;
        return m;
    }

    std::size_t size() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<Exponent>& exponents() const noexcept { return exps_; }

    std::uint64_t degree() const noexcept {
        std::uint64_t d = 0;
        for (auto e : exps_) d += e;
        return d;
    }

    bool is_one() const noexcept {
        return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
    }

    /// True when this monomial only involves variables flagged in `allowed`.
    bool supported_in(const std::vector<bool>& allowed) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] != 0 && !allowed[i]) return false;
        return true;
    }

    bool divides(const Monomial& other) const {
        assert(size() == other.size());
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    bool coprime_with(const Monomial& other) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] != 0 && other.exps_[i] != 0) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        assert(a.size() == b.size());
        Monomial r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
        return r;
    }

    /// a / b; requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        assert(b.divides(a));
        Monomial r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        assert(a.size() == b.size());
        Monomial r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        return r;
    }

    Monomial with_exponent(std::size_t index, Exponent e) const {
        Monomial r = *this;
        r.exps_[index] = e;
        return r;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string to_string(const VariableList& vars) const {
        std::string out;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] == 0) continue;
            if (!out.empty()) out += '*';
            out += vars[i];
            if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
        }
        return out.empty() ? "1" : out;
    }

private:
    std::vector<Exponent> exps_;
};

/// Graded reverse lexicographic comparison with x0 > x1 > ... .
inline std::strong_ordering degrevlex_compare(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
}

/// Map comparator placing larger monomials first (canonical storage order).
struct DegRevLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return degrevlex_compare(a, b) > 0; }
};

}  // namespace phdet
