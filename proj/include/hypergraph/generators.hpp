#ifndef HYPERGRAPH_GENERATORS_HPP
#define HYPERGRAPH_GENERATORS_HPP

#include <hypergraph/hypergraph.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace hypergraph {

// Vertex labeling is deterministic and documented per generator so tests and
// golden files can reference specific vertices.

/// P(n, k): chain of m k-edges, consecutive edges sharing exactly one vertex.
/// Edge i spans vertices i*(k-1) .. i*(k-1)+k-1; n = m*(k-1)+1.
inline Hypergraph hyperpath(std::size_t k, std::size_t m) {
    if (k < 2) throw std::invalid_argument("hyperpath: k must be at least 2");
    if (m < 1) throw std::invalid_argument("hyperpath: m must be at least 1");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Edge e;
        for (std::size_t j = 0; j < k; ++j) {
            e.push_back(static_cast<Vertex>(i * (k - 1) + j));
        }
        edges.push_back(std::move(e));
    }
    return Hypergraph::from_edge_list(static_cast<Vertex>(m * (k - 1) + 1),
                                      std::move(edges));
}

/// S*(n, k): m k-edges all meeting at the center, vertex 0.
/// Edge i is {0} together with i*(k-1)+1 .. (i+1)*(k-1); n = m*(k-1)+1.
inline Hypergraph superstar(std::size_t k, std::size_t m) {
    if (k < 2) throw std::invalid_argument("superstar: k must be at least 2");
    if (m < 1) throw std::invalid_argument("superstar: m must be at least 1");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Edge e{0};
        for (std::size_t j = 1; j < k; ++j) {
            e.push_back(static_cast<Vertex>(i * (k - 1) + j));
        }
        edges.push_back(std::move(e));
    }
    return Hypergraph::from_edge_list(static_cast<Vertex>(m * (k - 1) + 1),
                                      std::move(edges));
}

/// S(n, k; l1, l2): central edge 0 on vertices 0..k-1 with u1 = 0 and u2 = 1,
/// then l1 pendant edges at u1 followed by l2 pendant edges at u2, each
/// taking the next fresh block of k-1 vertices. m = l1+l2+1.
inline Hypergraph double_hyperstar(std::size_t k, std::size_t l1, std::size_t l2) {
    if (k < 3) throw std::invalid_argument("double_hyperstar: k must be at least 3");
    if (l1 < 1 || l2 < 1) {
        throw std::invalid_argument("double_hyperstar: l1 and l2 must be at least 1");
    }
    std::vector<Edge> edges;
    Edge central;
    for (std::size_t j = 0; j < k; ++j) central.push_back(static_cast<Vertex>(j));
    edges.push_back(std::move(central));
    Vertex next = static_cast<Vertex>(k);
    for (std::size_t side = 0; side < 2; ++side) {
        Vertex anchor = static_cast<Vertex>(side);  // u1 = 0, u2 = 1
        std::size_t count = side == 0 ? l1 : l2;
        for (std::size_t i = 0; i < count; ++i) {
            Edge e{anchor};
            for (std::size_t j = 1; j < k; ++j) e.push_back(next++);
            edges.push_back(std::move(e));
        }
    }
    return Hypergraph::from_edge_list(next, std::move(edges));
}

namespace detail {

/// Append a k-uniform path of `length` edges starting at `from`; all other
/// vertices are fresh, drawn from `next`. Returns the far-end vertex.
inline Vertex append_path(std::vector<Edge>& edges, Vertex& next, Vertex from,
                          std::size_t length, std::size_t k) {
    Vertex prev = from;
    for (std::size_t i = 0; i < length; ++i) {
        Edge e{prev};
        for (std::size_t j = 0; j + 2 < k; ++j) e.push_back(next++);
        Vertex end = next++;
        e.push_back(end);
        edges.push_back(std::move(e));
        prev = end;
    }
    return prev;
}

} // namespace detail

/**
 * G(Dv; p, q; wH): attach a pendant k-uniform path of length p at vertex v of
 * D, and a k-uniform path of length q joining v to vertex w of H. H may be a
 * single vertex (n = 1, no edges), in which case the q-path is simply pendant.
 *
 * Labels: D keeps 0..n_D-1; the p-path then the q-path take fresh blocks of
 * k-1 vertices per edge; remaining H vertices follow, in ascending original
 * order, with w mapped to the q-path's far end (or to v when q = 0).
 */
struct GraftSpec {
    Hypergraph D;
    Vertex v = 0;
    std::size_t p = 0;
    std::size_t q = 0;
    Hypergraph H = Hypergraph::from_edge_list(1, {});
    Vertex w = 0;
    std::size_t k = 3;
};

inline Hypergraph graft(const GraftSpec& spec) {
    if (spec.k < 2) throw std::invalid_argument("graft: k must be at least 2");
    if (spec.v >= spec.D.vertex_count()) {
        throw InvalidAttachment("graft: v is not a vertex of D");
    }
    if (spec.H.vertex_count() == 0 || spec.w >= spec.H.vertex_count()) {
        throw InvalidAttachment("graft: w is not a vertex of H");
    }
    if (spec.p + spec.q < 1) {
        throw InvalidAttachment("graft: p + q must be at least 1");
    }
    std::vector<Edge> edges = spec.D.edges();
    Vertex next = spec.D.vertex_count();
    detail::append_path(edges, next, spec.v, spec.p, spec.k);
    Vertex far = spec.q > 0 ? detail::append_path(edges, next, spec.v, spec.q, spec.k)
                            : spec.v;
    // splice H: w lands on the far end of the q-path
    std::vector<Vertex> map(spec.H.vertex_count());
    for (Vertex u = 0; u < spec.H.vertex_count(); ++u) {
        map[u] = u == spec.w ? far : next++;
    }
    for (const Edge& e : spec.H.edges()) {
        Edge f;
        f.reserve(e.size());
        for (Vertex u : e) f.push_back(map[u]);
        edges.push_back(std::move(f));
    }
    return Hypergraph::from_edge_list(next, std::move(edges));
}

/**
 * The branched configuration of the split comparison: a k-uniform path P0 of
 * length L0 at v0, with branch paths of lengths L1 <= ... <= Lf <= L0-1
 * attached at the f lowest-labeled interior vertices of P0's first edge.
 *
 * Labels: P0's first edge is {v0, n_D .. n_D+k-3, n_D+k-2} with interiors
 * n_D .. n_D+k-3; branch j starts at interior n_D+j-1.
 */
inline Hypergraph branch_split(const Hypergraph& D, Vertex v0, std::size_t k,
                               std::size_t L0, const std::vector<std::size_t>& branches) {
    if (k < 3) throw std::invalid_argument("branch_split: k must be at least 3");
    if (L0 < 1) throw std::invalid_argument("branch_split: L0 must be at least 1");
    if (branches.empty()) {
        throw std::invalid_argument("branch_split: at least one branch required");
    }
    if (v0 >= D.vertex_count()) {
        throw InvalidAttachment("branch_split: v0 is not a vertex of D");
    }
    if (branches.size() > k - 2) {
        throw TooManyBranches("at most k-2 branches fit on the first edge");
    }
    if (!std::is_sorted(branches.begin(), branches.end())) {
        throw std::invalid_argument("branch_split: branch lengths must be ascending");
    }
    for (std::size_t len : branches) {
        if (len < 1) throw std::invalid_argument("branch_split: branch lengths must be positive");
        if (len + 1 > L0) throw BranchTooLong("branch length must be at most L0 - 1");
    }
    std::vector<Edge> edges = D.edges();
    Vertex next = D.vertex_count();
    Vertex first_interior = next;  // interiors of the first edge: next .. next+k-3
    detail::append_path(edges, next, v0, L0, k);
    for (std::size_t j = 0; j < branches.size(); ++j) {
        detail::append_path(edges, next, first_interior + static_cast<Vertex>(j),
                            branches[j], k);
    }
    return Hypergraph::from_edge_list(next, std::move(edges));
}

/// One edge-replacement step: the edge at `edge_index` becomes
/// (edge \ removed) + target. Removed and target are positionally paired
/// lists of equal length t < |edge|; targets must be existing vertices.
struct ShiftItem {
    std::size_t edge_index = 0;
    std::vector<Vertex> removed;
    std::vector<Vertex> target;
};

/**
 * G' = G - sum e_i + sum e'_i. Items are applied in order against the
 * evolving edge list; each replacement keeps its edge index. The resulting
 * edge must be new (not equal to any current edge, itself included) and must
 * keep the original size, so the comparison's shape hypotheses hold structurally.
 * Eigenvector hypotheses are not checked here; see verify_edge_shift.
 */
inline Hypergraph edge_shift(const Hypergraph& h, const std::vector<ShiftItem>& items) {
    std::vector<Edge> edges = h.edges();
    for (const ShiftItem& item : items) {
        if (item.edge_index >= edges.size()) {
            throw EdgeNotFound("edge index " + std::to_string(item.edge_index) +
                               " out of range");
        }
        const Edge& e = edges[item.edge_index];
        const std::size_t t = item.removed.size();
        if (t == 0 || t != item.target.size()) {
            throw BadShiftShape("removed/target must be nonempty and equal-length");
        }
        if (t >= e.size()) {
            throw BadShiftShape("cannot remove all vertices of an edge");
        }
        std::vector<Vertex> removed = item.removed;
        std::sort(removed.begin(), removed.end());
        if (std::adjacent_find(removed.begin(), removed.end()) != removed.end()) {
            throw BadShiftShape("repeated vertex in removed list");
        }
        if (!std::includes(e.begin(), e.end(), removed.begin(), removed.end())) {
            throw BadShiftShape("removed vertices must lie in the edge");
        }
        std::vector<Vertex> target = item.target;
        std::sort(target.begin(), target.end());
        if (std::adjacent_find(target.begin(), target.end()) != target.end()) {
            throw BadShiftShape("repeated vertex in target list");
        }
        for (Vertex u : target) {
            if (u >= h.vertex_count()) {
                throw BadShiftShape("target vertex must already exist");
            }
        }
        Edge shifted;
        std::set_difference(e.begin(), e.end(), removed.begin(), removed.end(),
                            std::back_inserter(shifted));
        shifted.insert(shifted.end(), target.begin(), target.end());
        std::sort(shifted.begin(), shifted.end());
        shifted.erase(std::unique(shifted.begin(), shifted.end()), shifted.end());
        for (const Edge& other : edges) {
            if (other == shifted) {
                throw ResultingDuplicateEdge("shifted edge already present");
            }
        }
        if (shifted.size() != e.size()) {
            throw BadShiftShape("targets must not overlap the kept part of the edge");
        }
        edges[item.edge_index] = std::move(shifted);
    }
    return Hypergraph::from_edge_list(h.vertex_count(), std::move(edges));
}

} // namespace hypergraph

#endif // HYPERGRAPH_GENERATORS_HPP
