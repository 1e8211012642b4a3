#pragma once

#include "phdet/polyalg/polynomial.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace phdet {

/// Ideal given by generators over a shared variable list. Zero generators
/// are dropped, so the zero ideal has no generators.
class Ideal {
public:
    explicit Ideal(VariableList vars) : vars_(std::move(vars)) {}

    Ideal(VariableList vars, std::vector<Polynomial> generators) : vars_(std::move(vars)) {
        for (auto& g : generators) add(std::move(g));
    }

    void add(Polynomial g) {
        if (!(g.variables() == vars_)) throw std::invalid_argument("generator over a different variable list");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }

    const VariableList& variables() const noexcept { return vars_; }
    std::size_t nvars() const noexcept { return vars_.size(); }
    const std::vector<Polynomial>& generators() const noexcept { return gens_; }
    bool is_zero() const noexcept { return gens_.empty(); }

    friend Ideal operator+(Ideal a, const Ideal& b) {
        for (const auto& g : b.gens_) a.add(g);
        return a;
    }

private:
    VariableList vars_;
    std::vector<Polynomial> gens_;
};

}  // namespace phdet
