#ifndef HYPERGRAPH_CANONICAL_HPP
#define HYPERGRAPH_CANONICAL_HPP

#include <hypergraph/hypergraph.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hypergraph {

/**
 * Relabeling-invariant byte encoding of a supertree. Two supertrees are
 * isomorphic iff their codes are equal.
 *
 * Layout: the typed incidence tree is rooted at its center (both centers are
 * tried for bicentral trees and the lexicographically smaller code wins) and
 * encoded recursively as
 *
 *   code(node) = tag byte (0x01 vertex node, 0x02 edge node)
 *                then, for each child code C in ascending byte order,
 *                uint32 big-endian |C| followed by C.
 */
struct CanonicalCode {
    std::vector<std::uint8_t> bytes;

    auto operator<=>(const CanonicalCode&) const = default;

    std::string hex() const {
        static const char* digits = "0123456789abcdef";
        std::string s;
        s.reserve(bytes.size() * 2);
        for (std::uint8_t b : bytes) {
            s.push_back(digits[b >> 4]);
            s.push_back(digits[b & 0xf]);
        }
        return s;
    }
};

namespace detail {

inline std::vector<std::uint32_t> tree_centers(const IncidenceTree& t) {
    const std::size_t n = t.node_count();
    if (n == 1) return {0};
    std::vector<std::size_t> degree(n);
    std::vector<std::uint32_t> layer;
    std::size_t remaining = n;
    for (std::size_t i = 0; i < n; ++i) {
        degree[i] = t.adj[i].size();
        if (degree[i] <= 1) layer.push_back(static_cast<std::uint32_t>(i));
    }
    while (remaining > 2) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t leaf : layer) {
            --remaining;
            for (std::uint32_t nb : t.adj[leaf]) {
                if (--degree[nb] == 1) next.push_back(nb);
            }
            degree[leaf] = 0;
        }
        layer = std::move(next);
    }
    return layer;
}

inline std::vector<std::uint8_t> encode_rooted(const IncidenceTree& t,
                                               std::uint32_t node,
                                               std::uint32_t parent) {
    std::vector<std::vector<std::uint8_t>> children;
    for (std::uint32_t nb : t.adj[node]) {
        if (nb != parent) children.push_back(encode_rooted(t, nb, node));
    }
    std::sort(children.begin(), children.end());
    std::vector<std::uint8_t> out;
    out.push_back(t.is_edge_node(node) ? 0x02 : 0x01);
    for (const auto& c : children) {
        std::uint32_t len = static_cast<std::uint32_t>(c.size());
        out.push_back(static_cast<std::uint8_t>(len >> 24));
        out.push_back(static_cast<std::uint8_t>(len >> 16));
        out.push_back(static_cast<std::uint8_t>(len >> 8));
        out.push_back(static_cast<std::uint8_t>(len));
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

} // namespace detail

inline CanonicalCode canonical_code(const Hypergraph& h) {
    IncidenceTree t = incidence_tree(h);  // throws NotASupertree
    auto centers = detail::tree_centers(t);
    CanonicalCode best;
    bool first = true;
    constexpr std::uint32_t no_parent = 0xffffffff;
    for (std::uint32_t c : centers) {
        CanonicalCode code{detail::encode_rooted(t, c, no_parent)};
        if (first || code < best) {
            best = std::move(code);
            first = false;
        }
    }
    return best;
}

inline bool are_isomorphic(const Hypergraph& a, const Hypergraph& b) {
    return canonical_code(a) == canonical_code(b);
}

} // namespace hypergraph

#endif // HYPERGRAPH_CANONICAL_HPP
