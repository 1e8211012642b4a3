#pragma once

#include "phdet/polyalg/monomial.hpp"

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace phdet {

enum class OrderKind { degrevlex, lex, deglex };

/// A monomial order on a fixed number of variables. `priority[k]` is the
/// variable ranked k-th (priority[0] is the largest variable).
class MonomialOrder {
public:
    MonomialOrder(OrderKind kind, std::size_t nvars) : kind_(kind), priority_(nvars) {
        std::iota(priority_.begin(), priority_.end(), std::size_t{0});
    }

    MonomialOrder(OrderKind kind, std::vector<std::size_t> priority) : kind_(kind), priority_(std::move(priority)) {
        std::vector<bool> seen(priority_.size(), false);
        for (auto v : priority_) {
            if (v >= priority_.size() || seen[v]) throw std::invalid_argument("variable priority is not a permutation");
            seen[v] = true;
        }
    }

    static MonomialOrder degrevlex(std::size_t nvars) { return {OrderKind::degrevlex, nvars}; }
    static MonomialOrder lex(std::size_t nvars) { return {OrderKind::lex, nvars}; }
    static MonomialOrder deglex(std::size_t nvars) { return {OrderKind::deglex, nvars}; }

    OrderKind kind() const noexcept { return kind_; }
    const std::vector<std::size_t>& priority() const noexcept { return priority_; }
    std::size_t nvars() const noexcept { return priority_.size(); }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        if (kind_ != OrderKind::lex) {
            if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        }
        if (kind_ == OrderKind::degrevlex) {
            for (std::size_t k = priority_.size(); k-- > 0;) {
                auto v = priority_[k];
                if (a[v] != b[v]) return b[v] <=> a[v];
            }
            return std::strong_ordering::equal;
        }
        for (auto v : priority_) {
            if (a[v] != b[v]) return a[v] <=> b[v];
        }
        return std::strong_ordering::equal;
    }

    std::string name() const {
        switch (kind_) {
            case OrderKind::degrevlex: return "degrevlex";
            case OrderKind::lex: return "lex";
            case OrderKind::deglex: return "deglex";
        }
        return "?";
    }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    OrderKind kind_;
    std::vector<std::size_t> priority_;
};

/// Comparator putting larger monomials first.
struct OrderGreater {
    const MonomialOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

}  // namespace phdet
