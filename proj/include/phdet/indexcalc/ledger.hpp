#pragma once

#include "phdet/error.hpp"
#include "phdet/indexcalc/formulas.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace phdet {

enum class PointRole { variety_singularity, form_singularity_smooth_point };

inline std::string to_string(PointRole r) {
    return r == PointRole::variety_singularity ? "variety_singularity" : "form_singularity_smooth_point";
}

struct LedgerEntry {
    Point point;
    PointRole role = PointRole::form_singularity_smooth_point;
    std::optional<long long> index;
};

/// Global account of  sum Ind_PHN(w, X, p_i) = chi(X) + sum defect(p_i).
struct IndexLedger {
    std::vector<LedgerEntry> entries;
    std::optional<long long> chi_x;

    LedgerEntry* find(const Point& p) {
        for (auto& e : entries)
            if (e.point == p) return &e;
        return nullptr;
    }
    const LedgerEntry* find(const Point& p) const { return const_cast<IndexLedger*>(this)->find(p); }
};

enum class UnknownKind { index, chi_x, mu, chi_smoothing };

struct Unknown {
    UnknownKind kind;
    std::optional<Point> point;

    std::string name() const {
        switch (kind) {
            case UnknownKind::index: return "index@" + point->to_string();
            case UnknownKind::chi_x: return "chi_X";
            case UnknownKind::mu: return "mu@" + point->to_string();
            case UnknownKind::chi_smoothing: return "chi_smoothing@" + point->to_string();
        }
        return "?";
    }
};

struct IdentityVerified {
    long long lhs;
    long long rhs;
};
struct IdentityViolated {
    long long lhs;
    long long rhs;
};
struct IdentitySolved {
    Unknown unknown;
    long long value;
    /// Both sides after substituting the solution.
    long long lhs;
    long long rhs;
};
using IdentityResult = std::variant<IdentityVerified, IdentityViolated, IdentitySolved>;

namespace detail {

inline void validate_ledger(const IndexLedger& ledger, std::span<const SingularPointRecord> records) {
    for (std::size_t i = 0; i < ledger.entries.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (ledger.entries[i].point == ledger.entries[j].point)
                throw std::invalid_argument("point " + ledger.entries[i].point.to_string() + " listed twice");
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (!(records[i].type == records.front().type))
            throw LedgerError(LedgerError::Kind::mixed_types, "singular points must share one matrix type (n, p, t)");
        if (records[i].d != records.front().d)
            throw LedgerError(LedgerError::Kind::inconsistent_dimension, "singular points disagree on d");
        for (std::size_t j = 0; j < i; ++j)
            if (records[i].point == records[j].point)
                throw std::invalid_argument("singular point " + records[i].point.to_string() + " listed twice");
        const LedgerEntry* e = ledger.find(records[i].point);
        if (e == nullptr || e->role != PointRole::variety_singularity)
            throw LedgerError(LedgerError::Kind::missing_data,
                              "singular point " + records[i].point.to_string() + " has no variety_singularity entry");
    }
    for (const auto& e : ledger.entries) {
        if (e.role != PointRole::variety_singularity) continue;
        bool found = false;
        for (const auto& r : records) found = found || r.point == e.point;
        if (!found)
            throw LedgerError(LedgerError::Kind::missing_data,
                              "variety singularity " + e.point.to_string() + " has no local record");
    }
}

}  // namespace detail

/// Checks  sum of indices = chi(X) + sum of defects, or solves it when
/// exactly one of {an index, chi(X), a mu, a chi_smoothing} is unknown.
/// Every unknown enters with coefficient +-1, so solutions are integers.
inline IdentityResult global_identity(const IndexLedger& ledger, std::span<const SingularPointRecord> records) {
    detail::validate_ledger(ledger, records);

    std::vector<Unknown> unknowns;
    long long lhs = 0;
    for (const auto& e : ledger.entries) {
        if (e.index) lhs += *e.index;
        else unknowns.push_back({UnknownKind::index, e.point});
    }
    long long rhs = 0;
    if (ledger.chi_x) rhs += *ledger.chi_x;
    else unknowns.push_back({UnknownKind::chi_x, std::nullopt});

    // Defect of a record with one missing local invariant, as an affine
    // function of that invariant.
    std::function<long long(long long)> unknown_defect;
    for (const auto& rec : records) {
        if (resolve_chi_smoothing(rec)) {
            rhs += defect(rec);
            continue;
        }
        if (!rec.smoothable && !rec.chi_lower_stratum)
            throw LedgerError(LedgerError::Kind::missing_data,
                              "nonsmoothable point " + rec.point.to_string() + " needs chi_lower_stratum");
        SingularPointRecord copy = rec;
        if (derives_chi_from_mu(rec)) {
            unknowns.push_back({UnknownKind::mu, rec.point});
            unknown_defect = [copy](long long mu) mutable {
                copy.mu = mu;
                return defect(copy);
            };
        } else {
            unknowns.push_back({UnknownKind::chi_smoothing, rec.point});
            unknown_defect = [copy](long long chi) mutable {
                copy.chi_smoothing = chi;
                return defect(copy);
            };
        }
    }

    if (unknowns.empty()) {
        if (lhs == rhs) return IdentityVerified{lhs, rhs};
        return IdentityViolated{lhs, rhs};
    }
    if (unknowns.size() > 1) {
        std::string names;
        for (const auto& u : unknowns) names += (names.empty() ? "" : ", ") + u.name();
        throw LedgerError(LedgerError::Kind::too_many_unknowns, "more than one unknown: " + names);
    }

    const Unknown& u = unknowns.front();
    switch (u.kind) {
        case UnknownKind::index: {
            long long v = rhs - lhs;
            return IdentitySolved{u, v, rhs, rhs};
        }
        case UnknownKind::chi_x: {
            long long v = lhs - rhs;
            return IdentitySolved{u, v, lhs, lhs};
        }
        case UnknownKind::mu:
        case UnknownKind::chi_smoothing: {
            const long long base = unknown_defect(0);
            const long long coef = unknown_defect(1) - base;  // +-1
            long long v = coef * (lhs - rhs - base);
            return IdentitySolved{u, v, lhs, rhs + base + coef * v};
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace phdet
