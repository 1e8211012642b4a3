#pragma once

#include "phdet/detvar/point.hpp"
#include "phdet/grobner/ideal.hpp"
#include "phdet/polyalg/matrix.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace phdet {

enum class AmbientKind { affine, projective };

struct Ambient {
    AmbientKind kind = AmbientKind::projective;
    std::size_t dim = 0;

    friend bool operator==(const Ambient&, const Ambient&) = default;
};

/// Rank bound and matrix type shared by the singular points of one model.
struct MatrixType {
    std::size_t n = 0;  // rows
    std::size_t p = 0;  // columns
    std::size_t t = 0;  // rank bound

    friend bool operator==(const MatrixType&, const MatrixType&) = default;
};

/// (n - t + 1)(p - t + 1)
inline std::size_t expected_codimension(const MatrixType& type) {
    return (type.n - type.t + 1) * (type.p - type.t + 1);
}

/// Essential smoothings are smooth iff r < (n - t + 2)(p - t + 2).
inline bool smoothable(const MatrixType& type, std::size_t germ_ambient_dim) {
    return germ_ambient_dim < (type.n - type.t + 2) * (type.p - type.t + 2);
}

/// X = {x : rank F(x) < t} for an n x p polynomial matrix F, in affine
/// r-space (r variables) or projective r-space (r + 1 variables, entries
/// homogeneous of one common degree).
class DeterminantalModel {
public:
    DeterminantalModel(PolyMatrix matrix, std::size_t t, Ambient ambient)
        : matrix_(std::move(matrix)), t_(t), ambient_(ambient) {
        const std::size_t bound = std::min(matrix_.rows(), matrix_.cols());
        if (t_ < 1 || t_ > bound)
            throw std::invalid_argument("rank bound t=" + std::to_string(t_) + " must lie in [1, " +
                                        std::to_string(bound) + "]");
        const std::size_t nvars = matrix_.variables().size();
        const std::size_t want = ambient_.kind == AmbientKind::projective ? ambient_.dim + 1 : ambient_.dim;
        if (nvars != want)
            throw std::invalid_argument("ambient dimension " + std::to_string(ambient_.dim) + " needs " +
                                        std::to_string(want) + " variables, got " + std::to_string(nvars));
        if (ambient_.kind == AmbientKind::projective) {
            std::optional<long> degree;
            for (const auto& e : matrix_.entries()) {
                if (e.is_zero()) continue;
                if (!e.is_homogeneous())
                    throw std::invalid_argument("projective model needs homogeneous entries; '" + e.to_string() +
                                                "' is not");
                if (degree && *degree != e.degree())
                    throw std::invalid_argument("projective model needs entries of one common degree");
                degree = e.degree();
            }
        }
    }

    const PolyMatrix& matrix() const noexcept { return matrix_; }
    const VariableList& variables() const noexcept { return matrix_.variables(); }
    std::size_t t() const noexcept { return t_; }
    const Ambient& ambient() const noexcept { return ambient_; }
    bool is_projective() const noexcept { return ambient_.kind == AmbientKind::projective; }
    MatrixType type() const noexcept { return {matrix_.rows(), matrix_.cols(), t_}; }

    /// Dimension of the local germ's ambient space (affine chart in projective mode).
    std::size_t germ_ambient_dim() const noexcept { return ambient_.dim; }

    /// Builds a point of this model's ambient space, checking its length.
    Point check_point(const Point& point) const {
        if (point.size() != variables().size())
            throw std::invalid_argument("point " + point.to_string() + " has " + std::to_string(point.size()) +
                                        " coordinates, expected " + std::to_string(variables().size()));
        if (point.is_projective() != is_projective())
            throw std::invalid_argument("point " + point.to_string() + " does not match the ambient kind");
        return point;
    }

private:
    PolyMatrix matrix_;
    std::size_t t_;
    Ambient ambient_;
};

/// Ideal of all size x size minors, in canonical minor order.
inline Ideal minors_ideal(const DeterminantalModel& model, std::size_t size) {
    return Ideal(model.variables(), minors(model.matrix(), size));
}

enum class Stratum { outside, smooth_stratum, essential_singular };

inline std::string to_string(Stratum s) {
    switch (s) {
        case Stratum::outside: return "outside";
        case Stratum::smooth_stratum: return "smooth_stratum";
        case Stratum::essential_singular: return "essential_singular";
    }
    return "?";
}

struct PointStatus {
    Stratum stratum;
    std::size_t rank;
};

/// Rank-stratum membership. Transversality to the stratum is not checked.
inline PointStatus is_point_on_variety(const DeterminantalModel& model, const Point& point) {
    model.check_point(point);
    const std::size_t rank = model.matrix().rank_at_point(point.coords());
    if (rank >= model.t()) return {Stratum::outside, rank};
    if (rank + 2 <= model.t()) return {Stratum::essential_singular, rank};
    return {Stratum::smooth_stratum, rank};
}

}  // namespace phdet
