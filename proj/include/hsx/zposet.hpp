#pragma once

// The poset V of integer points of Delta_{k,n} in z-coordinates
// (z_i = x_1 + ... + x_i), its labeled Hasse diagram, and the maximal
// chains with distinct labels that form the simplices of the alcove
// triangulation.  Each simplex carries the permutation read from its
// chain's cover labels and the four derived permutation avatars.

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsx/permutation.hpp"

namespace hsx {

/// Raised when a geometric construction disagrees with its combinatorial
/// description; any such disagreement is a bug, never recoverable state.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Integer point (z_1, ..., z_m) with 0 <= z_1 <= 1, 0 <= z_{i+1}-z_i <= 1
/// and k-1 <= z_m <= k.
struct ZPoint {
    std::vector<int> z;

    bool operator==(const ZPoint&) const = default;
    auto operator<=>(const ZPoint&) const = default;

    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(z[i]);
        }
        out += ')';
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const ZPoint& p) {
        return os << p.str();
    }
};

/// Hasse cover to = from + e_i, labeled m+1-i.
struct Cover {
    int from = -1;
    int to = -1;
    int label = 0;
};

class PosetV {
public:
    PosetV(int k, int n) : k_(k), n_(n), m_(n - 1) {
        if (n < 2 || k < 1 || k > n - 1)
            throw std::invalid_argument("PosetV: need n >= 2 and 1 <= k <= n-1");
        // walk all increment patterns of the cube slice
        std::vector<int> z(static_cast<std::size_t>(m_), 0);
        collect(z, 0);
        std::sort(points_.begin(), points_.end());
        for (std::size_t i = 0; i < points_.size(); ++i) index_[points_[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < points_.size(); ++i) {
            for (int coord = 1; coord <= m_; ++coord) {
                ZPoint up = points_[i];
                up.z[static_cast<std::size_t>(coord) - 1] += 1;
                const auto it = index_.find(up);
                if (it != index_.end())
                    covers_.push_back({static_cast<int>(i), it->second, m_ + 1 - coord});
            }
        }
    }

    int k() const { return k_; }
    int n() const { return n_; }
    int m() const { return m_; }

    const std::vector<ZPoint>& points() const { return points_; }
    const std::vector<Cover>& covers() const { return covers_; }

    const ZPoint& point(int id) const { return points_[static_cast<std::size_t>(id)]; }

    int index_of(const ZPoint& p) const {
        const auto it = index_.find(p);
        return it == index_.end() ? -1 : it->second;
    }

    /// z_m == k-1: the point lies on the lower bounding hyperplane.
    bool on_lower_hyperplane(int id) const {
        return point(id).z.back() == k_ - 1;
    }

    /// id of point + e_coord, or -1 when the sum leaves the polytope.
    int step(int id, int coord) const {
        ZPoint up = point(id);
        up.z[static_cast<std::size_t>(coord) - 1] += 1;
        return index_of(up);
    }

private:
    void collect(std::vector<int>& z, int depth) {
        if (depth == m_) {
            const int zm = z.back();
            if (zm == k_ - 1 || zm == k_) points_.push_back({z});
            return;
        }
        const int base = depth == 0 ? 0 : z[static_cast<std::size_t>(depth) - 1];
        for (int inc = 0; inc <= 1; ++inc) {
            z[static_cast<std::size_t>(depth)] = base + inc;
            collect(z, depth + 1);
        }
    }

    int k_, n_, m_;
    std::vector<ZPoint> points_;
    std::vector<Cover> covers_;
    std::map<ZPoint, int> index_;
};

inline PosetV build_poset(int k, int n) { return PosetV(k, n); }

/// Maximal chain in V with pairwise distinct cover labels: a unimodular
/// simplex of the triangulation in its vertex expression (bottom to top).
struct SimplexChain {
    std::vector<int> vertices;  // m+1 point ids, increasing in V
    Permutation label_perm;     // labels read along the chain
    bool boundary_removed = false;

    SimplexChain(std::vector<int> vertices_, Permutation label_perm_)
        : vertices(std::move(vertices_)), label_perm(std::move(label_perm_)) {}
};

/// Reads the cover labels along a chain of point ids.  Throws if
/// consecutive points do not differ by a unit step or if labels repeat.
inline Permutation label_permutation(const PosetV& v, const std::vector<int>& chain) {
    const int m = v.m();
    if (static_cast<int>(chain.size()) != m + 1)
        throw std::invalid_argument("label_permutation: chain must have m+1 vertices");
    std::vector<int> labels;
    for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
        const ZPoint& a = v.point(chain[s]);
        const ZPoint& b = v.point(chain[s + 1]);
        int coord = -1;
        for (int i = 1; i <= m; ++i) {
            const int d = b.z[static_cast<std::size_t>(i) - 1] - a.z[static_cast<std::size_t>(i) - 1];
            if (d == 1 && coord == -1) coord = i;
            else if (d != 0)
                throw std::invalid_argument("label_permutation: not a unit cover step");
        }
        if (coord == -1)
            throw std::invalid_argument("label_permutation: repeated vertex");
        labels.push_back(m + 1 - coord);
    }
    return Permutation(std::move(labels));  // rejects repeated labels
}

/// All maximal chains with distinct labels.  Their count is the Eulerian
/// number A_{k,m}.
inline std::vector<SimplexChain> enumerate_simplices(const PosetV& v) {
    const int m = v.m();
    std::vector<SimplexChain> out;
    std::vector<int> chain;
    std::vector<bool> used(static_cast<std::size_t>(m) + 1, false);

    auto extend = [&](auto&& self, int at) -> void {
        if (static_cast<int>(chain.size()) == m + 1) {
            out.emplace_back(chain, label_permutation(v, chain));
            return;
        }
        for (int coord = 1; coord <= m; ++coord) {
            if (used[static_cast<std::size_t>(coord)]) continue;
            const int next = v.step(at, coord);
            if (next < 0) continue;
            used[static_cast<std::size_t>(coord)] = true;
            chain.push_back(next);
            self(self, next);
            chain.pop_back();
            used[static_cast<std::size_t>(coord)] = false;
        }
    };

    for (int start = 0; start < static_cast<int>(v.points().size()); ++start) {
        chain = {start};
        extend(extend, start);
    }
    std::sort(out.begin(), out.end(), [](const SimplexChain& a, const SimplexChain& b) {
        return a.vertices < b.vertices;
    });
    return out;
}

/// The five permutation views of one simplex, connected by
/// reverse / inverse / inverse-Foata transport.
struct Avatars {
    Permutation gamma, r, p, q, s;
};

inline Avatars make_avatars(const Permutation& label_perm) {
    const Permutation r = label_perm;
    const Permutation gamma = reverse_map(r);
    const Permutation p = inverse(r);
    const Permutation q = foata_inverse(p);
    const Permutation s = reverse_map(q);
    return {gamma, r, p, q, s};
}

/// Flags the simplices whose lower facet lies on the removed hyperplane.
/// Primary test is geometric (m of the m+1 vertices have z_m = k-1); the
/// label-permutation characterization (R ends in 1) is asserted to agree.
/// For k = 1 nothing is removed and no simplex is flagged.
inline void mark_boundary(const PosetV& v, std::vector<SimplexChain>& simplices) {
    for (SimplexChain& sc : simplices) {
        int on_lower = 0;
        for (int id : sc.vertices)
            if (v.on_lower_hyperplane(id)) ++on_lower;
        const bool geometric = on_lower == v.m();
        const bool avatar = sc.label_perm(v.m()) == 1;
        if (geometric != avatar)
            throw consistency_error(
                "mark_boundary: geometric lower-facet test disagrees with label test for " +
                sc.label_perm.str());
        sc.boundary_removed = v.k() > 1 && geometric;
    }
}

}  // namespace hsx
