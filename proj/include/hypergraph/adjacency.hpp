#ifndef HYPERGRAPH_ADJACENCY_HPP
#define HYPERGRAPH_ADJACENCY_HPP

#include <hypergraph/hypergraph.hpp>
#include <hypergraph/rational.hpp>

#include <charconv>
#include <cstddef>
#include <string>
#include <vector>

namespace hypergraph {

/**
 * Symmetric adjacency matrix with exact-rational entries
 *   A_ij = sum over edges e containing both i and j of 1/(|e| - 1),
 * zero diagonal. Assembly is exact; conversion to floating point happens
 * once, at eigensolver entry.
 */
struct AdjMatrix {
    std::size_t order = 0;
    std::vector<Rational> entries;  // row-major, order x order

    const Rational& at(std::size_t i, std::size_t j) const {
        return entries[i * order + j];
    }
    Rational& at(std::size_t i, std::size_t j) {
        return entries[i * order + j];
    }

    /// Row sums; equal to the vertex degrees, exactly.
    std::vector<Rational> row_sums() const {
        std::vector<Rational> sums(order);
        for (std::size_t i = 0; i < order; ++i) {
            for (std::size_t j = 0; j < order; ++j) sums[i] += at(i, j);
        }
        return sums;
    }

    std::vector<double> to_dense() const {
        std::vector<double> d(entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) d[i] = entries[i].to_double();
        return d;
    }
};

inline AdjMatrix adjacency_matrix(const Hypergraph& h) {
    AdjMatrix a;
    a.order = h.vertex_count();
    a.entries.assign(a.order * a.order, Rational());
    for (const Edge& e : h.edges()) {
        Rational w(1, static_cast<std::int64_t>(e.size()) - 1);
        for (std::size_t p = 0; p < e.size(); ++p) {
            for (std::size_t q = p + 1; q < e.size(); ++q) {
                a.at(e[p], e[q]) += w;
                a.at(e[q], e[p]) += w;
            }
        }
    }
    return a;
}

/// x_e = sum over unordered vertex pairs {u, v} of e of x_u * x_v.
inline double edge_quadratic(const std::vector<double>& x, const Edge& e) {
    double sum = 0.0;
    for (std::size_t p = 0; p < e.size(); ++p) {
        for (std::size_t q = p + 1; q < e.size(); ++q) {
            sum += x[e[p]] * x[e[q]];
        }
    }
    return sum;
}

namespace detail {

/// Shortest decimal that round-trips the double (at most 17 significant digits).
inline std::string shortest_decimal(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace detail

/// MatrixMarket coordinate export (symmetric real, lower triangle, 1-based).
inline std::string matrix_market(const AdjMatrix& a) {
    std::string body;
    std::size_t nnz = 0;
    for (std::size_t i = 0; i < a.order; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const Rational& r = a.at(i, j);
            if (r.is_zero()) continue;
            ++nnz;
            body += std::to_string(i + 1);
            body += ' ';
            body += std::to_string(j + 1);
            body += ' ';
            body += detail::shortest_decimal(r.to_double());
            body += '\n';
        }
    }
    std::string out = "%%MatrixMarket matrix coordinate real symmetric\n";
    out += std::to_string(a.order) + " " + std::to_string(a.order) + " " +
           std::to_string(nnz) + "\n";
    out += body;
    return out;
}

} // namespace hypergraph

#endif // HYPERGRAPH_ADJACENCY_HPP
