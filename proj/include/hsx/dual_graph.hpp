#pragma once

// Dual adjacency graph of the alcove triangulation of Delta'_{k,n}.
// Nodes are the chain simplices; two nodes are adjacent iff their vertex
// sets differ in exactly one vertex.  Each edge is labeled e_i by the
// position of the differing vertex and cross-checked against the
// permutation descriptions on the P avatars (letter swap for i >= 1,
// cyclic shift for i = 0).  Orientation follows the reverse-excedance /
// descent rules on the Q avatars; boundary simplices carry one phantom
// incoming e_0 marker standing for their removed lower facet.

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsx/permutation.hpp"
#include "hsx/zposet.hpp"

namespace hsx {

struct DualEdge {
    int a = -1;       // node ids, a < b
    int b = -1;
    int label = -1;   // e_label; 0 = type two, >= 1 = type one
    int from = -1;    // set by orient_edges
    int to = -1;

    bool type_two() const { return label == 0; }
};

/// Big/small block key of a node: I = Des(P avatar), J = Rexc(Q avatar).
struct Block {
    IndexSet i;
    IndexSet j;

    bool operator==(const Block&) const = default;
};

/// Set order used by the block comparison: I < I' iff |I| < |I'|, or the
/// sizes agree, the elements compare <= componentwise, and the sets differ.
inline bool index_set_less(const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    if (a == b) return false;
    for (std::size_t t = 0; t < a.size(); ++t)
        if (a.elems()[t] > b.elems()[t]) return false;
    return true;
}

/// s_{I,J} < s_{I',J'} iff I < I', or I = I' and J > J'.
inline bool block_less(const Block& x, const Block& y) {
    if (index_set_less(x.i, y.i)) return true;
    if (x.i == y.i) return index_set_less(y.j, x.j);
    return false;
}

enum class MoveKind { backward, forward, neither };

/// Movable-edge classification of e_i against a small-block key J; an
/// index beyond the carrier (i+1 > m) counts as outside J.
inline MoveKind classify_move(const IndexSet& j, int i, int m) {
    const bool lo = i >= 1 && i <= m && j.contains(i);
    const bool hi = i + 1 <= m && j.contains(i + 1);
    if (lo && !hi) return MoveKind::backward;
    if (!lo && hi) return MoveKind::forward;
    return MoveKind::neither;
}

class DualGraph {
public:
    DualGraph(int k, int n) : poset_(k, n) {
        simplices_ = enumerate_simplices(poset_);
        mark_boundary(poset_, simplices_);
        for (const SimplexChain& sc : simplices_) avatars_.push_back(make_avatars(sc.label_perm));
        build_lookups();
        build_edges();
        incident_.assign(simplices_.size(), {});
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            incident_[static_cast<std::size_t>(edges_[e].a)].push_back(static_cast<int>(e));
            incident_[static_cast<std::size_t>(edges_[e].b)].push_back(static_cast<int>(e));
        }
        phantom_.assign(simplices_.size(), false);
    }

    int k() const { return poset_.k(); }
    int n() const { return poset_.n(); }
    int m() const { return poset_.m(); }

    const PosetV& poset() const { return poset_; }
    const std::vector<SimplexChain>& simplices() const { return simplices_; }
    const std::vector<Avatars>& avatars() const { return avatars_; }
    const std::vector<DualEdge>& edges() const { return edges_; }
    std::vector<DualEdge>& mutable_edges() { return edges_; }
    const std::vector<int>& incident_edges(int node) const {
        return incident_[static_cast<std::size_t>(node)];
    }

    int size() const { return static_cast<int>(simplices_.size()); }
    bool oriented() const { return oriented_; }
    bool has_phantom(int node) const { return phantom_[static_cast<std::size_t>(node)]; }

    int node_by_q(const Permutation& q) const { return find_in(by_q_, q); }
    int node_by_p(const Permutation& p) const { return find_in(by_p_, p); }
    int node_by_r(const Permutation& r) const { return find_in(by_r_, r); }

    Block block_of(int node) const {
        const Avatars& av = avatars_[static_cast<std::size_t>(node)];
        return {descent_set(av.p), reverse_excedance_set(av.q)};
    }

    /// Directs every internal edge by the reverse-excedance / descent rules
    /// on Q (type one) or the cyclic-shift direction on P (type two), then
    /// adds one phantom incoming e_0 marker per boundary simplex.
    void orient_edges() {
        for (DualEdge& e : edges_) {
            const Avatars& aa = avatars_[static_cast<std::size_t>(e.a)];
            const Avatars& ab = avatars_[static_cast<std::size_t>(e.b)];
            bool a_to_b = false, b_to_a = false;
            if (e.label >= 1) {
                const IndexSet ja = reverse_excedance_set(aa.q);
                const IndexSet jb = reverse_excedance_set(ab.q);
                if (ja != jb) {
                    a_to_b = jb.contains(e.label);
                    b_to_a = ja.contains(e.label);
                } else {
                    a_to_b = descent_set(ab.q).contains(e.label);
                    b_to_a = descent_set(aa.q).contains(e.label);
                }
            } else {
                a_to_b = ab.p == shift_down(aa.p);
                b_to_a = aa.p == shift_down(ab.p);
            }
            if (a_to_b == b_to_a)
                throw consistency_error("orient_edges: ambiguous direction on edge e_" +
                                        std::to_string(e.label) + " between Q " +
                                        aa.q.str() + " and " + ab.q.str());
            e.from = a_to_b ? e.a : e.b;
            e.to = a_to_b ? e.b : e.a;
        }
        for (int v = 0; v < size(); ++v) {
            const SimplexChain& sc = simplices_[static_cast<std::size_t>(v)];
            if (!sc.boundary_removed) continue;
            const Permutation& q = avatars_[static_cast<std::size_t>(v)].q;
            if (q(m()) == m())
                throw consistency_error("orient_edges: boundary simplex with Q ending in m");
            // the removed facet would otherwise provide this e_0 in-edge
            for (int eid : incident_edges(v)) {
                const DualEdge& e = edges_[static_cast<std::size_t>(eid)];
                if (e.type_two() && e.to == v)
                    throw consistency_error(
                        "orient_edges: boundary simplex also has an internal incoming e_0");
            }
            phantom_[static_cast<std::size_t>(v)] = true;
        }
        oriented_ = true;
    }

    /// Internal directed in-degree (excludes the phantom marker).
    int incoming_internal(int node) const {
        require_oriented();
        int deg = 0;
        for (int eid : incident_edges(node))
            if (edges_[static_cast<std::size_t>(eid)].to == node) ++deg;
        return deg;
    }

    /// In-degree including the phantom boundary marker.
    int incoming_count(int node) const {
        return incoming_internal(node) + (has_phantom(node) ? 1 : 0);
    }

    /// Labels of incoming internal edges, sorted.
    std::vector<int> incoming_labels(int node) const {
        require_oriented();
        std::vector<int> out;
        for (int eid : incident_edges(node))
            if (edges_[static_cast<std::size_t>(eid)].to == node)
                out.push_back(edges_[static_cast<std::size_t>(eid)].label);
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Expected unique minimal new face of a simplex: one vertex per
    /// incoming edge (position label+1 along the chain), plus the top
    /// vertex for the removed lower facet.
    std::vector<int> incoming_vertex_set(int node) const {
        require_oriented();
        std::set<int> out;
        const SimplexChain& sc = simplices_[static_cast<std::size_t>(node)];
        for (int eid : incident_edges(node)) {
            const DualEdge& e = edges_[static_cast<std::size_t>(eid)];
            if (e.to == node)
                out.insert(sc.vertices[static_cast<std::size_t>(e.label)]);
        }
        if (has_phantom(node)) out.insert(sc.vertices.back());
        return {out.begin(), out.end()};
    }

    /// Linear extension; ties broken toward the lexicographically smallest
    /// Q avatar.  Throws with a witness cycle if the orientation is cyclic.
    std::vector<int> topo_order_default() const {
        auto cmp = [this](int x, int y) {
            return avatars_[static_cast<std::size_t>(x)].q.letters() >
                   avatars_[static_cast<std::size_t>(y)].q.letters();
        };
        std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
        return kahn(ready);
    }

    /// Linear extension with uniformly random tie-breaking.
    std::vector<int> topo_order_seeded(unsigned long long seed) const {
        require_oriented();
        std::mt19937_64 rng(seed);
        std::vector<int> indeg(static_cast<std::size_t>(size()), 0);
        for (const DualEdge& e : edges_) ++indeg[static_cast<std::size_t>(e.to)];
        std::vector<int> ready;
        for (int v = 0; v < size(); ++v)
            if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
        std::vector<int> order;
        while (!ready.empty()) {
            const std::size_t pick = static_cast<std::size_t>(rng() % ready.size());
            const int v = ready[pick];
            ready.erase(ready.begin() + static_cast<long>(pick));
            order.push_back(v);
            for (int eid : incident_edges(v)) {
                const DualEdge& e = edges_[static_cast<std::size_t>(eid)];
                if (e.from == v && --indeg[static_cast<std::size_t>(e.to)] == 0)
                    ready.push_back(e.to);
            }
        }
        if (static_cast<int>(order.size()) != size())
            throw consistency_error("topo_order: cycle detected: " + witness_cycle());
        return order;
    }

    /// Checks that a node ordering is a linear extension of the oriented
    /// edges (every edge points forward).
    bool is_linear_extension(const std::vector<int>& order) const {
        require_oriented();
        std::vector<int> pos(static_cast<std::size_t>(size()), -1);
        for (std::size_t i = 0; i < order.size(); ++i)
            pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
        for (int p : pos)
            if (p < 0) return false;
        for (const DualEdge& e : edges_)
            if (pos[static_cast<std::size_t>(e.from)] > pos[static_cast<std::size_t>(e.to)])
                return false;
        return true;
    }

private:
    template <typename Queue>
    std::vector<int> kahn(Queue& ready) const {
        require_oriented();
        std::vector<int> indeg(static_cast<std::size_t>(size()), 0);
        for (const DualEdge& e : edges_) ++indeg[static_cast<std::size_t>(e.to)];
        for (int v = 0; v < size(); ++v)
            if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
        std::vector<int> order;
        while (!ready.empty()) {
            const int v = ready.top();
            ready.pop();
            order.push_back(v);
            for (int eid : incident_edges(v)) {
                const DualEdge& e = edges_[static_cast<std::size_t>(eid)];
                if (e.from == v && --indeg[static_cast<std::size_t>(e.to)] == 0)
                    ready.push(e.to);
            }
        }
        if (static_cast<int>(order.size()) != size())
            throw consistency_error("topo_order: cycle detected: " + witness_cycle());
        return order;
    }

    // Any cycle reachable in the oriented graph, as Q avatars.
    std::string witness_cycle() const {
        std::vector<int> state(static_cast<std::size_t>(size()), 0);  // 0 new, 1 open, 2 done
        std::vector<int> stack, cycle;
        auto dfs = [&](auto&& self, int v) -> bool {
            state[static_cast<std::size_t>(v)] = 1;
            stack.push_back(v);
            for (int eid : incident_edges(v)) {
                const DualEdge& e = edges_[static_cast<std::size_t>(eid)];
                if (e.from != v) continue;
                if (state[static_cast<std::size_t>(e.to)] == 1) {
                    const auto it = std::find(stack.begin(), stack.end(), e.to);
                    cycle.assign(it, stack.end());
                    return true;
                }
                if (state[static_cast<std::size_t>(e.to)] == 0 && self(self, e.to)) return true;
            }
            stack.pop_back();
            state[static_cast<std::size_t>(v)] = 2;
            return false;
        };
        for (int v = 0; v < size(); ++v)
            if (state[static_cast<std::size_t>(v)] == 0 && dfs(dfs, v)) break;
        std::string out;
        for (int v : cycle) {
            if (!out.empty()) out += " -> ";
            out += avatars_[static_cast<std::size_t>(v)].q.str();
        }
        return out;
    }

    void require_oriented() const {
        if (!oriented_) throw std::logic_error("DualGraph: orient_edges has not run");
    }

    static Permutation shift_down(const Permutation& p) {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(p.size()));
        for (int x : p.letters()) out.push_back(x == 1 ? p.size() : x - 1);
        return Permutation(std::move(out));
    }

    template <typename Map>
    static int find_in(const Map& map, const Permutation& key) {
        const auto it = map.find(key.letters());
        return it == map.end() ? -1 : it->second;
    }

    void build_lookups() {
        auto add = [this](std::map<std::vector<int>, int>& map, const Permutation& key, int v) {
            if (!map.emplace(key.letters(), v).second)
                throw consistency_error("DualGraph: avatar collision for " + key.str());
        };
        for (int v = 0; v < size(); ++v) {
            const Avatars& av = avatars_[static_cast<std::size_t>(v)];
            add(by_gamma_, av.gamma, v);
            add(by_r_, av.r, v);
            add(by_p_, av.p, v);
            add(by_q_, av.q, v);
            add(by_s_, av.s, v);
        }
    }

    // Geometric adjacency from shared facets, label from the differing
    // position, then the P-avatar description is asserted for every edge.
    void build_edges() {
        std::map<std::vector<int>, std::vector<std::pair<int, int>>> facets;
        for (int v = 0; v < size(); ++v) {
            const auto& verts = simplices_[static_cast<std::size_t>(v)].vertices;
            for (int drop = 0; drop < static_cast<int>(verts.size()); ++drop) {
                std::vector<int> facet;
                for (int i = 0; i < static_cast<int>(verts.size()); ++i)
                    if (i != drop) facet.push_back(verts[static_cast<std::size_t>(i)]);
                facets[facet].push_back({v, drop});
            }
        }
        for (const auto& [facet, owners] : facets) {
            if (owners.size() == 1) continue;
            if (owners.size() > 2)
                throw consistency_error("build_edges: facet shared by more than two simplices");
            const auto [va, da] = owners[0];
            const auto [vb, db] = owners[1];
            if (da != db)
                throw consistency_error("build_edges: differing vertex positions disagree");
            if (da == m())
                throw consistency_error("build_edges: simplices differing in the top vertex");
            DualEdge e;
            e.a = std::min(va, vb);
            e.b = std::max(va, vb);
            e.label = da;
            validate_edge(e);
            edges_.push_back(e);
        }
        std::sort(edges_.begin(), edges_.end(), [](const DualEdge& x, const DualEdge& y) {
            return std::tie(x.a, x.b) < std::tie(y.a, y.b);
        });
    }

    void validate_edge(const DualEdge& e) const {
        const Permutation& pa = avatars_[static_cast<std::size_t>(e.a)].p;
        const Permutation& pb = avatars_[static_cast<std::size_t>(e.b)].p;
        if (e.label >= 1) {
            if (pb != swap_letters(pa, e.label))
                throw consistency_error("edge e_" + std::to_string(e.label) +
                                        ": P avatars are not a letter swap: " + pa.str() +
                                        " / " + pb.str());
            // the swapped letters must not sit next to each other
            int pos_lo = 0, pos_hi = 0;
            for (int i = 1; i <= m(); ++i) {
                if (pa(i) == e.label) pos_lo = i;
                if (pa(i) == e.label + 1) pos_hi = i;
            }
            if (pos_lo + 1 == pos_hi || pos_hi + 1 == pos_lo)
                throw consistency_error("edge e_" + std::to_string(e.label) +
                                        ": swapped letters are adjacent in " + pa.str());
        } else {
            const bool down = pb == shift_down(pa) && pa(1) != 1 && pa(m()) != 1;
            const bool up = pa == shift_down(pb) && pb(1) != 1 && pb(m()) != 1;
            if (!(down || up))
                throw consistency_error("edge e_0: P avatars are not a cyclic shift: " +
                                        pa.str() + " / " + pb.str());
        }
    }

    PosetV poset_;
    std::vector<SimplexChain> simplices_;
    std::vector<Avatars> avatars_;
    std::vector<DualEdge> edges_;
    std::vector<std::vector<int>> incident_;
    std::vector<bool> phantom_;
    bool oriented_ = false;
    std::map<std::vector<int>, int> by_gamma_, by_r_, by_p_, by_q_, by_s_;
};

/// Builds the graph with classified edges; orientation is a separate step.
inline DualGraph build_dual_graph(int k, int n) { return DualGraph(k, n); }

/// Restriction of the oriented graph to the simplices containing a face F
/// (a set of poset point ids).  In-degrees count only edges internal to
/// the restriction; phantom markers stand for facets shared with the
/// polytope below the removed hyperplane, which never contain a face of
/// the half-open polytope, so they are not counted here.
struct FaceSubgraphReport {
    std::vector<int> nodes;
    std::vector<int> sources;  // in-degree 0 within the restriction
    bool all_reachable = false;
};

inline FaceSubgraphReport face_subgraph_sources(const DualGraph& g, const std::vector<int>& face) {
    FaceSubgraphReport report;
    std::vector<int> f = face;
    std::sort(f.begin(), f.end());
    std::vector<char> in_sub(static_cast<std::size_t>(g.size()), 0);
    for (int v = 0; v < g.size(); ++v) {
        const auto& verts = g.simplices()[static_cast<std::size_t>(v)].vertices;
        if (std::includes(verts.begin(), verts.end(), f.begin(), f.end())) {
            in_sub[static_cast<std::size_t>(v)] = 1;
            report.nodes.push_back(v);
        }
    }
    for (int v : report.nodes) {
        int indeg = 0;
        for (int eid : g.incident_edges(v)) {
            const DualEdge& e = g.edges()[static_cast<std::size_t>(eid)];
            if (e.to == v && in_sub[static_cast<std::size_t>(e.from)]) ++indeg;
        }
        if (indeg == 0) report.sources.push_back(v);
    }
    if (report.sources.size() == 1) {
        std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
        std::vector<int> stack = {report.sources[0]};
        seen[static_cast<std::size_t>(report.sources[0])] = 1;
        std::size_t reached = 0;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            ++reached;
            for (int eid : g.incident_edges(v)) {
                const DualEdge& e = g.edges()[static_cast<std::size_t>(eid)];
                if (e.from == v && in_sub[static_cast<std::size_t>(e.to)] &&
                    !seen[static_cast<std::size_t>(e.to)]) {
                    seen[static_cast<std::size_t>(e.to)] = 1;
                    stack.push_back(e.to);
                }
            }
        }
        report.all_reachable = reached == report.nodes.size();
    }
    return report;
}

}  // namespace hsx
