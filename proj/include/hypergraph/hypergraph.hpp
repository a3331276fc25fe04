#ifndef HYPERGRAPH_HYPERGRAPH_HPP
#define HYPERGRAPH_HYPERGRAPH_HPP

#include <hypergraph/errors.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hypergraph {

using Vertex = std::uint32_t;

/// An edge is a duplicate-free vertex list; strictly ascending in normal form.
using Edge = std::vector<Vertex>;

/**
 * Immutable undirected hypergraph on vertices 0..n-1.
 *
 * Normal form: every edge is strictly ascending and has at least two
 * vertices; no two edges are equal as sets. Edge order is preserved from
 * construction, so operations may refer to edges by index.
 */
class Hypergraph {
public:
    Hypergraph() = default;

    /// Validating factory. Sorts each edge; rejects out-of-range vertices,
    /// edges with fewer than two distinct vertices, and repeated edges.
    static Hypergraph from_edge_list(Vertex n, std::vector<Edge> edges) {
        std::set<Edge> seen;
        for (Edge& e : edges) {
            for (Vertex v : e) {
                if (v >= n) {
                    throw VertexOutOfRange("vertex " + std::to_string(v) +
                                           " not below n = " + std::to_string(n));
                }
            }
            std::sort(e.begin(), e.end());
            e.erase(std::unique(e.begin(), e.end()), e.end());
            if (e.size() < 2) {
                throw EdgeTooSmall("edge needs at least 2 distinct vertices");
            }
            if (!seen.insert(e).second) {
                throw DuplicateEdge("repeated edge in input");
            }
        }
        Hypergraph h;
        h.n_ = n;
        h.edges_ = std::move(edges);
        return h;
    }

    Vertex vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_.at(i); }

    /// Edge size if all edges share one, otherwise nullopt.
    std::optional<std::size_t> uniformity() const {
        if (edges_.empty()) return std::nullopt;
        std::size_t k = edges_.front().size();
        for (const Edge& e : edges_) {
            if (e.size() != k) return std::nullopt;
        }
        return k;
    }

    /// Index of an edge given by any vertex order, or nullopt.
    std::optional<std::size_t> find_edge(Edge e) const {
        std::sort(e.begin(), e.end());
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (edges_[i] == e) return i;
        }
        return std::nullopt;
    }

    bool has_edge(const Edge& e) const { return find_edge(e).has_value(); }

    bool operator==(const Hypergraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    Vertex n_ = 0;
    std::vector<Edge> edges_;
};

/// Per-vertex incidence counts with the degree extremes.
struct DegreeProfile {
    std::vector<std::uint32_t> degrees;
    std::uint32_t delta = 0;  // minimum degree
    std::uint32_t Delta = 0;  // maximum degree
    bool regular = false;
};

inline DegreeProfile degree_profile(const Hypergraph& h) {
    DegreeProfile p;
    p.degrees.assign(h.vertex_count(), 0);
    for (const Edge& e : h.edges()) {
        for (Vertex v : e) ++p.degrees[v];
    }
    if (!p.degrees.empty()) {
        auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
        p.delta = *lo;
        p.Delta = *hi;
    }
    p.regular = p.delta == p.Delta;
    return p;
}

/// Edge indices incident to each vertex.
inline std::vector<std::vector<std::size_t>> vertex_edge_index(const Hypergraph& h) {
    std::vector<std::vector<std::size_t>> idx(h.vertex_count());
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        for (Vertex v : h.edge(i)) idx[v].push_back(i);
    }
    return idx;
}

/// True iff every vertex pair is joined by a walk through shared-vertex
/// edge adjacency. A single vertex with no edges is connected.
inline bool is_connected(const Hypergraph& h) {
    const Vertex n = h.vertex_count();
    if (n == 0) return true;
    auto idx = vertex_edge_index(h);
    std::vector<bool> vertex_seen(n, false);
    std::vector<bool> edge_seen(h.edge_count(), false);
    std::vector<Vertex> stack{0};
    vertex_seen[0] = true;
    Vertex reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (std::size_t ei : idx[v]) {
            if (edge_seen[ei]) continue;
            edge_seen[ei] = true;
            for (Vertex u : h.edge(ei)) {
                if (!vertex_seen[u]) {
                    vertex_seen[u] = true;
                    ++reached;
                    stack.push_back(u);
                }
            }
        }
    }
    return reached == n;
}

/**
 * Supertree test: connected, every pair of edges shares at most one vertex,
 * and n - 1 = sum over edges of (|e| - 1). For uniform input this is the
 * connected-acyclic characterization; the single vertex with no edges
 * counts as the trivial supertree.
 */
inline bool is_supertree(const Hypergraph& h) {
    if (h.vertex_count() == 0) return false;
    std::size_t weight = 0;
    for (const Edge& e : h.edges()) weight += e.size() - 1;
    if (weight != static_cast<std::size_t>(h.vertex_count()) - 1) return false;
    const auto& es = h.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            std::size_t common = 0;
            // both sorted ascending
            auto a = es[i].begin();
            auto b = es[j].begin();
            while (a != es[i].end() && b != es[j].end()) {
                if (*a < *b) ++a;
                else if (*b < *a) ++b;
                else { ++common; ++a; ++b; }
            }
            if (common > 1) return false;
        }
    }
    return is_connected(h);
}

/**
 * Bipartite incidence structure of a supertree: node ids 0..n-1 are vertex
 * nodes, n..n+m-1 are edge nodes, adjacent iff the vertex lies in the edge.
 * For a supertree this graph is a tree on n+m nodes.
 */
struct IncidenceTree {
    std::uint32_t vertex_nodes = 0;
    std::uint32_t edge_nodes = 0;
    std::vector<std::vector<std::uint32_t>> adj;

    std::size_t node_count() const { return adj.size(); }
    std::size_t tree_edge_count() const {
        std::size_t twice = 0;
        for (const auto& a : adj) twice += a.size();
        return twice / 2;
    }
    bool is_edge_node(std::uint32_t id) const { return id >= vertex_nodes; }
};

inline IncidenceTree incidence_tree(const Hypergraph& h) {
    if (!is_supertree(h)) {
        throw NotASupertree("incidence_tree requires a supertree");
    }
    IncidenceTree t;
    t.vertex_nodes = h.vertex_count();
    t.edge_nodes = static_cast<std::uint32_t>(h.edge_count());
    t.adj.assign(t.vertex_nodes + t.edge_nodes, {});
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        std::uint32_t enode = t.vertex_nodes + static_cast<std::uint32_t>(i);
        for (Vertex v : h.edge(i)) {
            t.adj[v].push_back(enode);
            t.adj[enode].push_back(v);
        }
    }
    return t;
}

/**
 * The k-th power of an ordinary tree: every 2-edge is padded with k-2 fresh
 * vertices, pairwise disjoint across edges. Tree vertices keep their labels
 * 0..n_T-1; edge i receives the fresh block n_T + i*(k-2) .. n_T + (i+1)*(k-2) - 1.
 */
inline Hypergraph power_k(const std::vector<std::pair<Vertex, Vertex>>& tree_edges,
                          std::size_t k) {
    if (k < 3) throw std::invalid_argument("power_k: k must be at least 3");
    if (tree_edges.empty()) throw NotATree("empty edge list");
    Vertex n_t = 0;
    for (auto [u, v] : tree_edges) n_t = std::max({n_t, u + 1, v + 1});
    Hypergraph base;
    try {
        std::vector<Edge> pairs;
        pairs.reserve(tree_edges.size());
        for (auto [u, v] : tree_edges) pairs.push_back({u, v});
        base = Hypergraph::from_edge_list(n_t, std::move(pairs));
    } catch (const Error&) {
        throw NotATree("input pairs are not simple 2-edges");
    }
    if (base.edge_count() != static_cast<std::size_t>(n_t) - 1 || !is_connected(base)) {
        throw NotATree("input pairs do not form a tree");
    }
    std::vector<Edge> out;
    out.reserve(base.edge_count());
    Vertex next = n_t;
    for (const Edge& e : base.edges()) {
        Edge big = e;
        for (std::size_t j = 0; j + 2 < k; ++j) big.push_back(next++);
        out.push_back(std::move(big));
    }
    return Hypergraph::from_edge_list(next, std::move(out));
}

/// Apply a vertex permutation (perm[old] = new).
inline Hypergraph relabeled(const Hypergraph& h, const std::vector<Vertex>& perm) {
    if (perm.size() != h.vertex_count()) {
        throw std::invalid_argument("relabeled: permutation size mismatch");
    }
    std::vector<Edge> edges;
    edges.reserve(h.edge_count());
    for (const Edge& e : h.edges()) {
        Edge f;
        f.reserve(e.size());
        for (Vertex v : e) f.push_back(perm[v]);
        edges.push_back(std::move(f));
    }
    return Hypergraph::from_edge_list(h.vertex_count(), std::move(edges));
}

} // namespace hypergraph

#endif // HYPERGRAPH_HYPERGRAPH_HPP
