#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace phdet::topo {

/// Number of cells in each dimension of a finite CW complex.
struct CWDescriptor {
    std::vector<std::uint64_t> cell_counts;
};

/// Wedge of spheres; an empty bouquet is a point.
struct BouquetDescriptor {
    std::vector<unsigned> sphere_dimensions;
};

inline long long chi_cw(const CWDescriptor& c) {
    long long chi = 0;
    for (std::size_t i = 0; i < c.cell_counts.size(); ++i) {
        auto n = static_cast<long long>(c.cell_counts[i]);
        chi += (i % 2 == 0) ? n : -n;
    }
    return chi;
}

inline long long chi_bouquet(const BouquetDescriptor& b) {
    long long chi = 1;
    for (auto k : b.sphere_dimensions) {
        if (k == 0) throw std::invalid_argument("bouquet spheres must have positive dimension");
        chi += (k % 2 == 0) ? 1 : -1;
    }
    return chi;
}

/// One 0-cell plus one k-cell per sphere.
inline CWDescriptor cw_model(const BouquetDescriptor& b) {
    CWDescriptor cw{{1}};
    for (auto k : b.sphere_dimensions) {
        if (cw.cell_counts.size() <= k) cw.cell_counts.resize(k + 1, 0);
        ++cw.cell_counts[k];
    }
    return cw;
}

/// Homotopy type of the determinantal Milnor fibre of a smoothable
/// codimension-2 germ: S^2 v (wedge of mu spheres of dimension d) for d = 3
/// and a wedge of mu 2-spheres for d = 2.
inline BouquetDescriptor milnor_fibre_bouquet(int d, long long mu) {
    if (mu < 0) throw std::invalid_argument("Milnor number must be non-negative");
    BouquetDescriptor b;
    if (d == 2) {
        b.sphere_dimensions.assign(static_cast<std::size_t>(mu), 2);
    } else if (d == 3) {
        b.sphere_dimensions.push_back(2);
        b.sphere_dimensions.insert(b.sphere_dimensions.end(), static_cast<std::size_t>(mu), 3);
    } else {
        throw std::domain_error("Milnor fibre bouquet only known for d = 2, 3");
    }
    return b;
}

struct MilnorData {
    int d = 0;
    long long mu = 0;
    std::optional<long long> b2;
    /// Polar multiplicity m_d.
    std::optional<long long> polar_multiplicity;
    /// Milnor number of the generic hyperplane section.
    std::optional<long long> mu_slice;
    /// Matrix columns p and germ ambient dimension r; when both are given the
    /// bouquet hypothesis 2p > r is checked.
    std::optional<long long> cols;
    std::optional<long long> ambient_dim;
};

/// Euler characteristic of the essential smoothing, d = 2: 1 + mu,
/// d = 3: 2 - mu. Other dimensions must be supplied by the caller.
inline long long chi_smoothing(const MilnorData& m) {
    if (m.d != 2 && m.d != 3)
        throw std::domain_error("chi of the smoothing is only derived for d = 2, 3; supply it directly");
    if (m.mu < 0) throw std::invalid_argument("Milnor number must be non-negative");
    if (m.cols && m.ambient_dim && !(2 * *m.cols > *m.ambient_dim))
        throw std::domain_error("bouquet description needs 2p > r (p=" + std::to_string(*m.cols) +
                                ", r=" + std::to_string(*m.ambient_dim) + ")");
    return m.d == 2 ? 1 + m.mu : 2 - m.mu;
}

struct Holds {};
struct Violated {
    long long lhs;
    long long rhs;
};
struct InsufficientData {
    std::string missing;
};
using LeGreuelResult = std::variant<Holds, Violated, InsufficientData>;

/// m_2 = mu_slice + mu (d = 2); m_3 = mu_slice + mu + b_2 (d = 3), b_2
/// defaulting to 1 for smoothable codimension-2 threefolds.
inline LeGreuelResult le_greuel_check(const MilnorData& m) {
    if (m.d != 2 && m.d != 3) return InsufficientData{"identity only stated for d = 2, 3"};
    if (!m.polar_multiplicity) return InsufficientData{"polar multiplicity m_d"};
    if (!m.mu_slice) return InsufficientData{"Milnor number of the hyperplane section"};
    long long rhs = *m.mu_slice + m.mu;
    if (m.d == 3) rhs += m.b2.value_or(1);
    if (*m.polar_multiplicity == rhs) return Holds{};
    return Violated{*m.polar_multiplicity, rhs};
}

/// chi(X) = chi(X') + l, where X' removes l small contractible balls.
inline long long chi_additive(long long chi_x_prime, long long l) {
    if (l < 0) throw std::invalid_argument("number of removed points must be non-negative");
    return chi_x_prime + l;
}

}  // namespace phdet::topo
