#pragma once

#include "phdet/detvar/model.hpp"
#include "phdet/detvar/weights.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace phdet {

struct FixedPoint {
    Point point;
    Stratum stratum;
};

namespace detail {

inline void check_cstar_weights(const DeterminantalModel& model, const std::vector<long long>& weights) {
    if (!model.is_projective()) throw std::invalid_argument("C*-action fixed points need a projective model");
    if (weights.size() != model.variables().size())
        throw std::invalid_argument("expected " + std::to_string(model.variables().size()) + " weights, got " +
                                    std::to_string(weights.size()));
    auto sorted = weights;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("weights must be pairwise distinct for isolated fixed points");
}

}  // namespace detail

/// Fixed points of the diagonal C*-action on X: the coordinate points e_j
/// lying on X, tagged with their rank stratum.
inline std::vector<FixedPoint> cstar_fixed_points(const DeterminantalModel& model, const std::vector<long long>& weights) {
    detail::check_cstar_weights(model, weights);
    if (!is_weighted_homogeneous(minors(model.matrix(), model.t()), weights))
        throw std::invalid_argument("the C*-action with these weights does not preserve X");
    std::vector<FixedPoint> out;
    const std::size_t n = model.variables().size();
    for (std::size_t j = 0; j < n; ++j) {
        Point e = Point::coordinate(n, j);
        auto status = is_point_on_variety(model, e);
        if (status.stratum != Stratum::outside) out.push_back({e, status.stratum});
    }
    return out;
}

/// Index of the C*-form at a smooth coordinate fixed point. All chart
/// weights w_i - w_j are nonzero, so the zero is nondegenerate: index 1.
inline long long cstar_smooth_index(const Point& point, const std::vector<long long>& weights,
                                    const DeterminantalModel& model) {
    detail::check_cstar_weights(model, weights);
    model.check_point(point);
    if (!point.coordinate_index()) throw std::invalid_argument(point.to_string() + " is not a coordinate point");
    auto status = is_point_on_variety(model, point);
    if (status.stratum != Stratum::smooth_stratum)
        throw std::invalid_argument(point.to_string() + " is " + to_string(status.stratum) +
                                    ", not a smooth point of X");
    return 1;
}

}  // namespace phdet
