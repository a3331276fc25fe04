#ifndef HYPERGRAPH_ENUMERATION_HPP
#define HYPERGRAPH_ENUMERATION_HPP

#include <hypergraph/canonical.hpp>
#include <hypergraph/format.hpp>
#include <hypergraph/hypergraph.hpp>
#include <hypergraph/spectral.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hypergraph {

struct EnumOptions {
    double tol = 1e-12;
    std::size_t max_iter = 1000000;
    Method method = Method::power;
    std::uint32_t vertex_budget = 5000;
};

struct CatalogEntry {
    CanonicalCode code;
    Hypergraph representative;
    SpectralResult spectrum;
};

/// One representative per isomorphism class of k-uniform supertrees with m
/// edges, sorted by descending spectral radius, ties by ascending code.
struct Catalog {
    std::uint32_t k = 0;
    std::uint32_t m = 0;
    std::vector<CatalogEntry> entries;
};

namespace detail {

/// Canonical augmentation: every supertree has a pendant edge, so every
/// (k, m) class arises from a (k, m-1) class by attaching a fresh edge at
/// one existing vertex. Classes are deduplicated by canonical code and the
/// per-level maps keep code order, so output is deterministic.
inline std::vector<Hypergraph> augmentation_classes(std::size_t k, std::uint32_t m,
                                                    std::uint32_t vertex_budget) {
    if (static_cast<std::uint64_t>(m) * (k - 1) + 1 > vertex_budget) {
        throw BudgetExceeded("vertex budget " + std::to_string(vertex_budget) +
                             " exceeded for k=" + std::to_string(k) +
                             ", m=" + std::to_string(m));
    }
    Edge seed;
    for (std::size_t j = 0; j < k; ++j) seed.push_back(static_cast<Vertex>(j));
    std::map<CanonicalCode, Hypergraph> level;
    {
        Hypergraph h = Hypergraph::from_edge_list(static_cast<Vertex>(k), {seed});
        level.emplace(canonical_code(h), std::move(h));
    }
    for (std::uint32_t step = 2; step <= m; ++step) {
        std::map<CanonicalCode, Hypergraph> next;
        for (const auto& [code, rep] : level) {
            const Vertex n = rep.vertex_count();
            for (Vertex v = 0; v < n; ++v) {
                std::vector<Edge> edges = rep.edges();
                Edge fresh{v};
                for (std::size_t j = 1; j < k; ++j) {
                    fresh.push_back(n + static_cast<Vertex>(j) - 1);
                }
                edges.push_back(std::move(fresh));
                Hypergraph grown = Hypergraph::from_edge_list(
                    n + static_cast<Vertex>(k - 1), std::move(edges));
                CanonicalCode gcode = canonical_code(grown);
                next.emplace(std::move(gcode), std::move(grown));
            }
        }
        level = std::move(next);
    }
    std::vector<Hypergraph> out;
    out.reserve(level.size());
    for (auto& [code, rep] : level) out.push_back(std::move(rep));
    return out;
}

} // namespace detail

/// Representatives only, in canonical-code order, without spectra.
inline std::vector<Hypergraph> supertree_representatives(std::size_t k, std::uint32_t m,
                                                         std::uint32_t vertex_budget = 5000) {
    if (k < 3) throw std::invalid_argument("supertree enumeration requires k >= 3");
    if (m < 1) throw std::invalid_argument("supertree enumeration requires m >= 1");
    return detail::augmentation_classes(k, m, vertex_budget);
}

/// All trees with m edges up to isomorphism, as 2-uniform hypergraphs.
/// (A simple 2-uniform connected graph with n-1 edges is a supertree, so the
/// same augmentation and coding machinery applies.)
inline std::vector<Hypergraph> enumerate_trees(std::uint32_t m) {
    if (m < 1) throw std::invalid_argument("enumerate_trees requires m >= 1");
    return detail::augmentation_classes(2, m, 5000);
}

inline Catalog enumerate_supertrees(std::size_t k, std::uint32_t m,
                                    const EnumOptions& opt = {}) {
    Catalog cat;
    cat.k = static_cast<std::uint32_t>(k);
    cat.m = m;
    for (Hypergraph& rep : supertree_representatives(k, m, opt.vertex_budget)) {
        CatalogEntry entry;
        entry.code = canonical_code(rep);
        entry.spectrum = spectral_radius(rep, opt.tol, opt.max_iter, opt.method);
        entry.representative = std::move(rep);
        cat.entries.push_back(std::move(entry));
    }
    std::sort(cat.entries.begin(), cat.entries.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) {
                  if (a.spectrum.rho != b.spectrum.rho) {
                      return a.spectrum.rho > b.spectrum.rho;
                  }
                  return a.code < b.code;
              });
    return cat;
}

/// CSV export: code-hex, n, m, k, rho, degree multiset (ascending,
/// space-separated).
inline std::string catalog_csv(const Catalog& cat) {
    std::string out = "code,n,m,k,rho,degrees\n";
    for (const CatalogEntry& e : cat.entries) {
        DegreeProfile p = degree_profile(e.representative);
        std::sort(p.degrees.begin(), p.degrees.end());
        out += e.code.hex();
        out += ',' + std::to_string(e.representative.vertex_count());
        out += ',' + std::to_string(e.representative.edge_count());
        out += ',' + std::to_string(cat.k);
        out += ',' + format_significant(e.spectrum.rho);
        out += ',';
        for (std::size_t i = 0; i < p.degrees.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(p.degrees[i]);
        }
        out += '\n';
    }
    return out;
}

} // namespace hypergraph

#endif // HYPERGRAPH_ENUMERATION_HPP
