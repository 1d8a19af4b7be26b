#pragma once

// Incremental shelling verification: walk the simplices in a proposed
// order, track every face seen so far, and demand a unique minimal new
// face at each step.  The shelling number #(alpha) counts the facets of
// alpha already seen.  The hypersimplex pipeline seeds the face set with
// everything on the removed lower hyperplane, orders the simplices by a
// linear extension of the dual-graph orientation, and cross-checks the
// step data against the incoming edges.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "hsx/dual_graph.hpp"
#include "hsx/ehrhart.hpp"

namespace hsx {

struct ShellingStep {
    int shelling_number = 0;
    std::vector<int> minimal_new_face;  // sorted vertex ids
};

struct ShellingReport {
    bool ok = true;
    int failed_at = -1;       // index into the order at the first violation
    std::string failure;
    std::vector<ShellingStep> steps;  // one per simplex up to the failure
};

namespace detail {

inline std::string face_key(const std::vector<int>& sorted_face) {
    std::string key;
    key.reserve(sorted_face.size() * 2);
    for (int v : sorted_face) {
        key.push_back(static_cast<char>(v & 0xff));
        key.push_back(static_cast<char>((v >> 8) & 0xff));
    }
    return key;
}

}  // namespace detail

/// Runs the unique-minimal-new-face test over simplices given as sorted
/// vertex-id sets.  Faces of `preseeded` (and all their subsets) count as
/// already seen; a facet found there contributes to the shelling number
/// exactly like a facet of an earlier simplex.
inline ShellingReport shelling_verify(const std::vector<std::vector<int>>& simplices_in_order,
                                      const std::vector<std::vector<int>>& preseeded = {}) {
    ShellingReport report;
    std::unordered_set<std::string> seen;

    auto insert_all_subsets = [&seen](const std::vector<int>& verts) {
        const std::size_t size = verts.size();
        for (std::uint32_t mask = 0; mask < (1u << size); ++mask) {
            std::vector<int> face;
            for (std::size_t i = 0; i < size; ++i)
                if (mask & (1u << i)) face.push_back(verts[i]);
            seen.insert(detail::face_key(face));
        }
    };

    for (const auto& f : preseeded) {
        std::vector<int> sorted = f;
        std::sort(sorted.begin(), sorted.end());
        insert_all_subsets(sorted);
    }

    for (std::size_t idx = 0; idx < simplices_in_order.size(); ++idx) {
        std::vector<int> verts = simplices_in_order[idx];
        std::sort(verts.begin(), verts.end());
        const std::size_t size = verts.size();

        // enumerate subsets once, collecting new faces and old facets
        std::vector<std::uint32_t> new_masks;
        int old_facets = 0;
        for (std::uint32_t mask = 0; mask < (1u << size); ++mask) {
            std::vector<int> face;
            for (std::size_t i = 0; i < size; ++i)
                if (mask & (1u << i)) face.push_back(verts[i]);
            const bool is_new = !seen.contains(detail::face_key(face));
            if (is_new) new_masks.push_back(mask);
            else if (face.size() == size - 1) ++old_facets;
        }

        // a new face is minimal iff all its one-smaller subfaces are old
        std::unordered_set<std::uint32_t> new_set(new_masks.begin(), new_masks.end());
        std::vector<std::uint32_t> minimal;
        for (std::uint32_t mask : new_masks) {
            bool is_minimal = true;
            for (std::size_t i = 0; i < size && is_minimal; ++i)
                if (mask & (1u << i)) is_minimal = !new_set.contains(mask & ~(1u << i));
            if (is_minimal) minimal.push_back(mask);
        }

        if (minimal.size() != 1) {
            report.ok = false;
            report.failed_at = static_cast<int>(idx);
            std::ostringstream os;
            os << "simplex #" << idx << " has " << minimal.size()
               << " minimal new faces:";
            for (std::uint32_t mask : minimal) {
                os << " {";
                bool first = true;
                for (std::size_t i = 0; i < size; ++i)
                    if (mask & (1u << i)) {
                        if (!first) os << ',';
                        os << verts[i];
                        first = false;
                    }
                os << '}';
            }
            report.failure = os.str();
            return report;
        }

        ShellingStep step;
        step.shelling_number = old_facets;
        for (std::size_t i = 0; i < size; ++i)
            if (minimal[0] & (1u << i)) step.minimal_new_face.push_back(verts[i]);
        report.steps.push_back(std::move(step));

        for (std::uint32_t mask : new_masks) {
            std::vector<int> face;
            for (std::size_t i = 0; i < size; ++i)
                if (mask & (1u << i)) face.push_back(verts[i]);
            seen.insert(detail::face_key(face));
        }
    }
    return report;
}

/// Shelling of the half-open hypersimplex along a given linear extension
/// of the oriented dual graph.  On top of the generic check this asserts,
/// for every simplex, that the shelling number equals the in-degree
/// (internal plus phantom) and that the minimal new face is the vertex
/// set spelled out by the incoming edges.
inline ShellingReport shell_along_order(const DualGraph& g, const std::vector<int>& order) {
    if (!g.is_linear_extension(order))
        throw std::invalid_argument("shell_along_order: order is not a linear extension");

    std::vector<std::vector<int>> simplices;
    std::vector<std::vector<int>> preseeded;
    for (int node : order)
        simplices.push_back(g.simplices()[static_cast<std::size_t>(node)].vertices);
    if (g.k() > 1) {
        for (const SimplexChain& sc : g.simplices()) {
            std::vector<int> lower;
            for (int id : sc.vertices)
                if (g.poset().on_lower_hyperplane(id)) lower.push_back(id);
            preseeded.push_back(std::move(lower));
        }
    }

    ShellingReport report = shelling_verify(simplices, preseeded);
    if (!report.ok) return report;

    for (std::size_t idx = 0; idx < order.size(); ++idx) {
        const int node = order[idx];
        const ShellingStep& step = report.steps[idx];
        if (step.shelling_number != g.incoming_count(node)) {
            report.ok = false;
            report.failed_at = static_cast<int>(idx);
            report.failure = "shelling number " + std::to_string(step.shelling_number) +
                             " != in-degree " + std::to_string(g.incoming_count(node)) +
                             " at Q " + g.avatars()[static_cast<std::size_t>(node)].q.str();
            return report;
        }
        if (step.minimal_new_face != g.incoming_vertex_set(node)) {
            report.ok = false;
            report.failed_at = static_cast<int>(idx);
            report.failure = "minimal new face differs from the incoming-edge vertex set at Q " +
                             g.avatars()[static_cast<std::size_t>(node)].q.str();
            return report;
        }
    }
    return report;
}

/// h-vector read off a shelling: c_i = #{simplices with shelling number i}.
inline HVector h_by_shelling(int k, int n, std::optional<unsigned long long> seed = {}) {
    DualGraph g(k, n);
    g.orient_edges();
    const std::vector<int> order = seed ? g.topo_order_seeded(*seed) : g.topo_order_default();
    const ShellingReport report = shell_along_order(g, order);
    if (!report.ok)
        throw consistency_error("h_by_shelling: " + report.failure);
    std::vector<Int> coeffs(static_cast<std::size_t>(n), Int(0));
    for (const ShellingStep& step : report.steps) {
        if (step.shelling_number < 0 || step.shelling_number >= n)
            throw consistency_error("h_by_shelling: shelling number out of range");
        coeffs[static_cast<std::size_t>(step.shelling_number)] += 1;
    }
    return HVector{HypersimplexId(k, n, true), std::move(coeffs)};
}

}  // namespace hsx
