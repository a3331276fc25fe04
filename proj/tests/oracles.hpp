#ifndef TESTS_ORACLES_HPP
#define TESTS_ORACLES_HPP

// Test-only oracles, kept independent of the library code paths they check:
// isomorphism by exhaustive permutation search, enumeration deduplicated by
// minimum-permutation normal forms, and closed-form / root-bracketing values
// for spectral radii.

#include <hypergraph/generators.hpp>
#include <hypergraph/hypergraph.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracles {

using hypergraph::Edge;
using hypergraph::Hypergraph;
using hypergraph::Vertex;

using EdgeList = std::vector<Edge>;

inline EdgeList normalized_edges(const Hypergraph& h) {
    EdgeList edges = h.edges();
    for (Edge& e : edges) std::sort(e.begin(), e.end());
    std::sort(edges.begin(), edges.end());
    return edges;
}

/// Lexicographically minimal sorted edge list over all vertex relabelings.
/// Factorial cost; intended for n <= 9.
inline EdgeList min_perm_form(const Hypergraph& h) {
    const Vertex n = h.vertex_count();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    EdgeList best;
    bool first = true;
    do {
        EdgeList mapped;
        mapped.reserve(h.edge_count());
        for (const Edge& e : h.edges()) {
            Edge f;
            f.reserve(e.size());
            for (Vertex v : e) f.push_back(perm[v]);
            std::sort(f.begin(), f.end());
            mapped.push_back(std::move(f));
        }
        std::sort(mapped.begin(), mapped.end());
        if (first || mapped < best) {
            best = std::move(mapped);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Exhaustive isomorphism test (all vertex bijections, early exit).
inline bool brute_isomorphic(const Hypergraph& a, const Hypergraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
        return false;
    }
    auto size_multiset = [](const Hypergraph& h) {
        std::vector<std::size_t> sizes;
        for (const Edge& e : h.edges()) sizes.push_back(e.size());
        std::sort(sizes.begin(), sizes.end());
        return sizes;
    };
    if (size_multiset(a) != size_multiset(b)) return false;
    auto degree_multiset = [](const Hypergraph& h) {
        auto d = hypergraph::degree_profile(h).degrees;
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degree_multiset(a) != degree_multiset(b)) return false;

    const EdgeList target = normalized_edges(b);
    const Vertex n = a.vertex_count();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        EdgeList mapped;
        mapped.reserve(a.edge_count());
        for (const Edge& e : a.edges()) {
            Edge f;
            f.reserve(e.size());
            for (Vertex v : e) f.push_back(perm[v]);
            std::sort(f.begin(), f.end());
            mapped.push_back(std::move(f));
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// All k-uniform supertrees with m edges up to isomorphism, deduplicated by
/// min_perm_form (never by the library's canonical codes).
inline std::vector<Hypergraph> brute_supertrees(std::size_t k, std::uint32_t m) {
    Edge seed;
    for (std::size_t j = 0; j < k; ++j) seed.push_back(static_cast<Vertex>(j));
    std::map<EdgeList, Hypergraph> level;
    {
        Hypergraph h = Hypergraph::from_edge_list(static_cast<Vertex>(k), {seed});
        level.emplace(min_perm_form(h), std::move(h));
    }
    for (std::uint32_t step = 2; step <= m; ++step) {
        std::map<EdgeList, Hypergraph> next;
        for (const auto& [form, rep] : level) {
            const Vertex n = rep.vertex_count();
            for (Vertex v = 0; v < n; ++v) {
                EdgeList edges = rep.edges();
                Edge fresh{v};
                for (std::size_t j = 1; j < k; ++j) {
                    fresh.push_back(n + static_cast<Vertex>(j) - 1);
                }
                edges.push_back(std::move(fresh));
                Hypergraph grown = Hypergraph::from_edge_list(
                    n + static_cast<Vertex>(k - 1), std::move(edges));
                next.emplace(min_perm_form(grown), std::move(grown));
            }
        }
        level = std::move(next);
    }
    std::vector<Hypergraph> out;
    out.reserve(level.size());
    for (auto& [form, rep] : level) out.push_back(std::move(rep));
    return out;
}

/// Number of labeled k-uniform supertrees with m edges on n = m(k-1)+1
/// vertices: (n-1)! n^(m-1) / (m! ((k-1)!)^m). Generalizes Cayley's n^(n-2)
/// (the k = 2 case). Exact; throws on non-divisibility.
inline unsigned long long labeled_supertree_count(std::size_t k, std::size_t m) {
    const unsigned long long n = m * (k - 1) + 1;
    unsigned __int128 numerator = 1;
    for (unsigned long long i = 2; i < n; ++i) numerator *= i;          // (n-1)!
    for (std::size_t i = 1; i < m; ++i) numerator *= n;                 // n^(m-1)
    unsigned __int128 denominator = 1;
    for (std::size_t i = 2; i <= m; ++i) denominator *= i;              // m!
    unsigned long long pad_perms = 1;
    for (std::size_t i = 2; i <= k - 1; ++i) pad_perms *= i;            // (k-1)!
    for (std::size_t i = 0; i < m; ++i) denominator *= pad_perms;
    if (numerator % denominator != 0) {
        throw std::logic_error("labeled_supertree_count: not divisible");
    }
    return static_cast<unsigned long long>(numerator / denominator);
}

namespace detail {

inline std::pair<std::vector<std::uint8_t>, unsigned long long> encode_with_aut(
    const hypergraph::IncidenceTree& t, std::uint32_t node, std::uint32_t parent) {
    std::vector<std::pair<std::vector<std::uint8_t>, unsigned long long>> kids;
    for (std::uint32_t nb : t.adj[node]) {
        if (nb != parent) kids.push_back(encode_with_aut(t, nb, node));
    }
    std::sort(kids.begin(), kids.end());
    unsigned long long aut = 1;
    std::size_t run = 1;
    for (std::size_t i = 0; i < kids.size(); ++i) {
        aut *= kids[i].second;
        if (i + 1 < kids.size() && kids[i].first == kids[i + 1].first) {
            ++run;
        } else {
            for (std::size_t f = 2; f <= run; ++f) aut *= f;
            run = 1;
        }
    }
    std::vector<std::uint8_t> code;
    code.push_back(t.is_edge_node(node) ? 2 : 1);
    for (const auto& kid : kids) {
        code.push_back(static_cast<std::uint8_t>(kid.first.size() >> 8));
        code.push_back(static_cast<std::uint8_t>(kid.first.size()));
        code.insert(code.end(), kid.first.begin(), kid.first.end());
    }
    return {std::move(code), aut};
}

/// Tree centers by the double-sweep diameter method (independent of the
/// library's leaf-peeling implementation).
inline std::vector<std::uint32_t> centers_by_diameter(const hypergraph::IncidenceTree& t) {
    auto farthest = [&](std::uint32_t from) {
        std::vector<std::int32_t> parent(t.node_count(), -1);
        std::vector<std::uint32_t> order{from};
        parent[from] = static_cast<std::int32_t>(from);
        for (std::size_t head = 0; head < order.size(); ++head) {
            for (std::uint32_t nb : t.adj[order[head]]) {
                if (parent[nb] < 0) {
                    parent[nb] = static_cast<std::int32_t>(order[head]);
                    order.push_back(nb);
                }
            }
        }
        return std::make_pair(order.back(), parent);
    };
    auto [a, ignored] = farthest(0);
    auto [b, parent] = farthest(a);
    std::vector<std::uint32_t> path;
    for (std::uint32_t v = b;; v = static_cast<std::uint32_t>(parent[v])) {
        path.push_back(v);
        if (v == a) break;
    }
    if (path.size() % 2 == 1) return {path[path.size() / 2]};
    return {path[path.size() / 2 - 1], path[path.size() / 2]};
}

} // namespace detail

/// Order of the automorphism group of a supertree, counted on its typed
/// incidence tree (vertex automorphisms extend uniquely to edge nodes).
inline unsigned long long automorphism_count(const Hypergraph& h) {
    hypergraph::IncidenceTree t = hypergraph::incidence_tree(h);
    auto centers = detail::centers_by_diameter(t);
    if (centers.size() == 1) {
        return detail::encode_with_aut(t, centers[0], centers[0]).second;
    }
    auto left = detail::encode_with_aut(t, centers[0], centers[1]);
    auto right = detail::encode_with_aut(t, centers[1], centers[0]);
    unsigned long long aut = left.second * right.second;
    if (left.first == right.first) aut *= 2;
    return aut;
}

/// Positive root of (k-1) r^2 - (k-2) r - m = 0: the superstar spectral
/// radius from the two-orbit symmetry reduction.
inline double superstar_rho(std::size_t k, std::size_t m) {
    const double a = static_cast<double>(k) - 1.0;
    const double b = static_cast<double>(k) - 2.0;
    return (b + std::sqrt(b * b + 4.0 * a * static_cast<double>(m))) / (2.0 * a);
}

/// Root of f in [lo, hi] by bisection; f(lo) and f(hi) must differ in sign.
inline double bisect_root(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        double fmid = f(mid);
        if ((flo <= 0) == (fmid <= 0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Largest root of 4 r^3 - 4 r^2 - 3 r + 1, the P(7,3) symmetry reduction.
inline double path7_rho() {
    return bisect_root([](double r) { return ((4.0 * r - 4.0) * r - 3.0) * r + 1.0; },
                       1.2, 2.0);
}

inline std::vector<Vertex> random_permutation(Vertex n, std::mt19937& rng) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

/// Random tree on n vertices by random attachment.
inline std::vector<std::pair<Vertex, Vertex>> random_tree(Vertex n, std::mt19937& rng) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<Vertex> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    return edges;
}

/// Random k-uniform supertree with m edges by random pendant-edge attachment.
inline Hypergraph random_supertree(std::size_t k, std::uint32_t m, std::mt19937& rng) {
    Edge seed;
    for (std::size_t j = 0; j < k; ++j) seed.push_back(static_cast<Vertex>(j));
    EdgeList edges{seed};
    Vertex n = static_cast<Vertex>(k);
    for (std::uint32_t i = 1; i < m; ++i) {
        std::uniform_int_distribution<Vertex> pick(0, n - 1);
        Edge fresh{pick(rng)};
        for (std::size_t j = 1; j < k; ++j) fresh.push_back(n++);
        edges.push_back(std::move(fresh));
    }
    return Hypergraph::from_edge_list(n, std::move(edges));
}

} // namespace oracles

#endif // TESTS_ORACLES_HPP
