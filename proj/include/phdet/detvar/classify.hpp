#pragma once

#include "phdet/detvar/model.hpp"
#include "phdet/detvar/weights.hpp"
#include "phdet/grobner/dimension.hpp"
#include "phdet/grobner/solve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace phdet {

/// Outcome of the quasi-homogeneity check at the singular points.
enum class LocalGate { passed, failed, not_applicable };

inline std::string to_string(LocalGate g) {
    switch (g) {
        case LocalGate::passed: return "passed";
        case LocalGate::failed: return "failed";
        case LocalGate::not_applicable: return "not_applicable";
    }
    return "?";
}

struct GermClassification {
    bool empty = false;
    int codimension = 0;
    int expected_codimension = 0;
    /// Dimension d of X (projective dimension in projective mode).
    int dimension = 0;
    bool determinantal = false;
    /// -1 when the singular locus is empty.
    int singular_locus_dimension = -1;
    bool isolated_singularity = false;
    bool smoothable = false;
    std::vector<Point> singular_points;
    /// False when the singular locus is positive dimensional or has
    /// non-rational points, so `singular_points` is not the whole locus.
    bool singular_points_complete = true;
    LocalGate local_gate = LocalGate::not_applicable;
    /// Positive weights found for each singular point's translated chart ideal.
    std::vector<std::vector<Integer>> chart_weights;
};

namespace detail {

// f(x + shift) with shift applied coordinate-wise.
inline Polynomial translate(const Polynomial& f, const std::vector<Rational>& shift) {
    const auto& vars = f.variables();
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        Polynomial x = Polynomial::variable(vars, i);
        if (shift[i] != 0) x += Polynomial::constant(vars, shift[i]);
        images.push_back(std::move(x));
    }
    Polynomial out(vars);
    for (const auto& [m, c] : f.terms()) {
        Polynomial term = Polynomial::constant(vars, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) term *= images[i].pow(m[i]);
        out += term;
    }
    return out;
}

// Generators of the germ ideal at `point`, moved to the origin of the chart
// where the first nonzero coordinate is 1.
inline std::vector<Polynomial> germ_generators(const Ideal& ideal, const Point& point) {
    std::vector<Rational> shift = point.coords();
    std::optional<std::size_t> chart;
    if (point.is_projective()) {
        chart = point.first_nonzero();
        Rational scale = shift[*chart];
        for (auto& s : shift) s /= scale;
        shift[*chart] = 0;
    }
    std::vector<Polynomial> out;
    for (auto g : ideal.generators()) {
        if (chart) g = g.substitute(*chart, 1);
        out.push_back(translate(g, shift));
    }
    return out;
}

}  // namespace detail

/// Codimension, dimension, determinantality, essential singular locus and
/// smoothability of a determinantal model.
inline GermClassification classify(const DeterminantalModel& model, BuchbergerOptions options = {}) {
    bool all_zero = true;
    for (const auto& e : model.matrix().entries()) all_zero = all_zero && e.is_zero();
    if (all_zero) throw std::invalid_argument("matrix is identically zero");

    GermClassification out;
    const auto type = model.type();
    const int nvars = static_cast<int>(model.variables().size());
    const bool proj = model.is_projective();
    const auto order = MonomialOrder::degrevlex(model.variables().size());
    out.expected_codimension = static_cast<int>(expected_codimension(type));
    out.smoothable = smoothable(type, model.germ_ambient_dim());

    const Ideal variety = minors_ideal(model, model.t());
    const int cone_dim = ideal_dimension(variety, order, options);
    out.empty = proj ? cone_dim <= 0 : cone_dim < 0;
    if (out.empty) {
        out.codimension = static_cast<int>(model.ambient().dim) + 1;
        out.dimension = -1;
        out.determinantal = false;
        out.isolated_singularity = true;
        return out;
    }
    out.codimension = nvars - cone_dim;
    out.dimension = static_cast<int>(model.ambient().dim) - out.codimension;
    out.determinantal = out.codimension == out.expected_codimension;

    if (model.t() == 1) {
        // M^0 is empty: the zero-matrix locus has no essential singularities.
        out.singular_locus_dimension = -1;
        out.isolated_singularity = true;
        return out;
    }
    const Ideal locus = minors_ideal(model, model.t() - 1) + variety;
    const int locus_cone_dim = ideal_dimension(locus, order, options);
    out.singular_locus_dimension = proj ? std::max(locus_cone_dim - 1, -1) : locus_cone_dim;
    out.isolated_singularity = out.singular_locus_dimension <= 0;
    if (!out.isolated_singularity) {
        out.singular_points_complete = false;
        return out;
    }
    if (out.singular_locus_dimension == -1) return out;

    if (proj) {
        for (std::size_t chart = 0; chart < model.variables().size(); ++chart) {
            std::vector<std::optional<Rational>> fixed(model.variables().size());
            for (std::size_t i = 0; i < chart; ++i) fixed[i] = Rational(0);
            fixed[chart] = Rational(1);
            auto pts = rational_points(locus, fixed, options);
            out.singular_points_complete = out.singular_points_complete && pts.complete;
            for (auto& c : pts.points) out.singular_points.push_back(Point::projective(std::move(c)));
        }
    } else {
        auto pts = rational_points(locus, {}, options);
        out.singular_points_complete = pts.complete;
        for (auto& c : pts.points) out.singular_points.push_back(Point::affine(std::move(c)));
    }
    std::sort(out.singular_points.begin(), out.singular_points.end());

    if (!out.singular_points_complete) return out;
    out.local_gate = LocalGate::passed;
    for (const auto& pt : out.singular_points) {
        auto weights = positive_homogeneity_weights(detail::germ_generators(variety, pt), model.variables().size());
        if (!weights) {
            out.local_gate = LocalGate::failed;
            out.chart_weights.clear();
            break;
        }
        out.chart_weights.push_back(std::move(*weights));
    }
    return out;
}

}  // namespace phdet
