#pragma once

#include "phdet/detvar/model.hpp"
#include "phdet/detvar/weights.hpp"
#include "phdet/error.hpp"
#include "phdet/grobner/dimension.hpp"
#include "phdet/topo/euler.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace phdet {

inline long long minus_one_pow(long long k) { return (k % 2 == 0) ? 1 : -1; }

/// Local data of one isolated determinantal singularity.
struct SingularPointRecord {
    Point point;
    MatrixType type;
    int d = 0;
    bool smoothable = true;
    std::optional<long long> mu;
    /// chi of the essential smoothing.
    std::optional<long long> chi_smoothing;
    /// chi of the rank <= t-2 stratum of the essential smoothing (nonsmoothable case).
    std::optional<long long> chi_lower_stratum;
};

/// True when chi of the smoothing can be derived from mu: smoothable,
/// codimension 2, d in {2, 3}.
inline bool derives_chi_from_mu(const SingularPointRecord& rec) {
    return rec.smoothable && (rec.d == 2 || rec.d == 3) && expected_codimension(rec.type) == 2;
}

inline std::optional<long long> resolve_chi_smoothing(const SingularPointRecord& rec) {
    if (rec.chi_smoothing) return rec.chi_smoothing;
    if (rec.mu && derives_chi_from_mu(rec)) {
        topo::MilnorData m;
        m.d = rec.d;
        m.mu = *rec.mu;
        m.cols = static_cast<long long>(rec.type.p);
        m.ambient_dim = rec.d + 2;
        return topo::chi_smoothing(m);
    }
    return std::nullopt;
}

/// Ind_PHN = Ind_rad + (-1)^d (chi(smoothing) - 1), smoothable germs.
inline long long phn_from_radial(long long radial_index, int d, long long chi_smoothing) {
    return radial_index + minus_one_pow(d) * (chi_smoothing - 1);
}

/// Radial index split into the points q_j where the interpolated form vanishes.
struct RadialDecomposition {
    std::vector<long long> inner_indices;
};

inline long long radial_from_decomposition(const RadialDecomposition& dec) {
    long long sum = 1;
    for (auto i : dec.inner_indices) sum += i;
    return sum;
}

/// Ind_PHN = Ind_rad + (-1)^d (chi(smoothing) - 1) + (-1)^(n+p+1) (p-t+1) chi(lower stratum).
inline long long phn_from_radial_nonsmoothable(long long radial_index, const SingularPointRecord& rec) {
    if (rec.smoothable) throw std::invalid_argument("record is smoothable; use phn_from_radial");
    if (!rec.chi_smoothing || !rec.chi_lower_stratum)
        throw LedgerError(LedgerError::Kind::missing_data,
                          "nonsmoothable point " + rec.point.to_string() + " needs chi_smoothing and chi_lower_stratum");
    if (rec.type.t > rec.type.p) throw std::invalid_argument("rank bound exceeds column count");
    const auto& ty = rec.type;
    return phn_from_radial(radial_index, rec.d, *rec.chi_smoothing) +
           minus_one_pow(static_cast<long long>(ty.n + ty.p + 1)) * static_cast<long long>(ty.p - ty.t + 1) *
               *rec.chi_lower_stratum;
}

/// Per-singularity correction term of the global index formula, which is the
/// PHN index of a radial form at that point.
inline long long defect(const SingularPointRecord& rec) {
    auto chi = resolve_chi_smoothing(rec);
    if (!chi)
        throw LedgerError(LedgerError::Kind::missing_data,
                          "point " + rec.point.to_string() + " needs mu or chi_smoothing");
    if (rec.smoothable) return phn_from_radial(1, rec.d, *chi);
    SingularPointRecord filled = rec;
    filled.chi_smoothing = chi;
    return phn_from_radial_nonsmoothable(1, filled);
}

/// A 1-form given either by a C*-action (weights per homogeneous
/// coordinate) or by explicit coefficient polynomials in chart variables.
struct CStarForm {
    std::vector<long long> weights;
};
struct ExplicitForm {
    std::vector<Polynomial> coefficients;
};
using OneFormSpec = std::variant<CStarForm, ExplicitForm>;

/// Index of an explicit 1-form at an isolated zero in a smooth chart: the
/// dimension of the local algebra of its coefficient ideal at the origin.
/// The coefficients must be weighted homogeneous with positive weights, so
/// the origin is the only zero and the global quotient equals the local one.
inline long long smooth_zero_index(const ExplicitForm& form, BuchbergerOptions options = {}) {
    if (form.coefficients.empty()) throw std::invalid_argument("form has no coefficients");
    const VariableList vars = form.coefficients.front().variables();
    if (form.coefficients.size() != vars.size())
        throw std::invalid_argument("form needs one coefficient per chart variable");
    Ideal ideal(vars);
    for (const auto& c : form.coefficients) ideal.add(c.over(vars));
    if (!positive_homogeneity_weights(ideal.generators(), vars.size()))
        throw UnsupportedError("form coefficients are not weighted homogeneous; local index unsupported");
    auto q = quotient_dimension(ideal, MonomialOrder::degrevlex(vars.size()), options);
    if (!q) throw UnsupportedError("zero of the form is not isolated");
    return static_cast<long long>(*q);
}

}  // namespace phdet
