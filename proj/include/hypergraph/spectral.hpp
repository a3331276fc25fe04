#ifndef HYPERGRAPH_SPECTRAL_HPP
#define HYPERGRAPH_SPECTRAL_HPP

#include <hypergraph/adjacency.hpp>
#include <hypergraph/hypergraph.hpp>

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace hypergraph {

enum class Method { power, dense };

struct SpectralResult {
    double rho = 0.0;
    std::vector<double> eigvec;     // L2 norm 1; strictly positive for connected input
    std::size_t iterations = 0;
    double residual = 0.0;          // ||A x - rho x||_inf of the returned pair
};

/// y = A x accumulated edge-wise: every edge e adds (S - x_v)/(|e|-1) to y_v,
/// with S the sum of x over e. Cost O(sum |e|), no matrix materialized.
inline std::vector<double> apply_adjacency(const Hypergraph& h,
                                           const std::vector<double>& x) {
    std::vector<double> y(h.vertex_count(), 0.0);
    for (const Edge& e : h.edges()) {
        double s = 0.0;
        for (Vertex v : e) s += x[v];
        double inv = 1.0 / static_cast<double>(e.size() - 1);
        for (Vertex v : e) y[v] += (s - x[v]) * inv;
    }
    return y;
}

inline double rayleigh_quotient(const Hypergraph& h, const std::vector<double>& x) {
    std::vector<double> y = apply_adjacency(h, x);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += x[i] * y[i];
        den += x[i] * x[i];
    }
    return num / den;
}

namespace detail {

struct JacobiResult {
    std::vector<double> eigenvalues;
    std::vector<double> vectors;  // row-major; column j is eigenvector j
    std::size_t sweeps = 0;
};

/// Cyclic Jacobi on a dense symmetric matrix (row-major), rotating until the
/// off-diagonal Frobenius norm drops below off_tol.
inline JacobiResult jacobi_eigen(std::vector<double> a, std::size_t n,
                                 bool want_vectors, double off_tol = 1e-13) {
    JacobiResult out;
    out.vectors.assign(want_vectors ? n * n : 0, 0.0);
    if (want_vectors) {
        for (std::size_t i = 0; i < n; ++i) out.vectors[i * n + i] = 1.0;
    }
    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) s += a[p * n + q] * a[p * n + q];
        }
        return std::sqrt(2.0 * s);
    };
    const std::size_t max_sweeps = 100;
    while (off_norm() > off_tol) {
        if (out.sweeps++ >= max_sweeps) {
            throw NoConvergence("jacobi sweeps exhausted");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = a[p * n + q];
                if (std::abs(apq) < 1e-300) continue;
                double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);
                double app = a[p * n + p], aqq = a[q * n + q];
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = a[q * n + p] = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        double arp = a[r * n + p], arq = a[r * n + q];
                        a[r * n + p] = a[p * n + r] = arp - s * (arq + tau * arp);
                        a[r * n + q] = a[q * n + r] = arq + s * (arp - tau * arq);
                    }
                    if (want_vectors) {
                        double vrp = out.vectors[r * n + p];
                        double vrq = out.vectors[r * n + q];
                        out.vectors[r * n + p] = vrp - s * (vrq + tau * vrp);
                        out.vectors[r * n + q] = vrq + s * (vrp - tau * vrq);
                    }
                }
            }
        }
    }
    out.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = a[i * n + i];
    return out;
}

inline double dot(const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline double inf_residual(const std::vector<double>& ax, double rho,
                           const std::vector<double>& x) {
    double r = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        r = std::max(r, std::abs(ax[i] - rho * x[i]));
    }
    return r;
}

} // namespace detail

/// Largest eigenvalue of the adjacency matrix via cyclic Jacobi; for a
/// symmetric nonnegative matrix this equals the spectral radius. Independent
/// of the power-iteration path. Desk scale only.
inline double dense_eigen_oracle(const Hypergraph& h) {
    if (h.vertex_count() > 2000) {
        throw TooLarge("dense oracle limited to n <= 2000");
    }
    if (h.vertex_count() == 0) throw Disconnected("empty hypergraph");
    AdjMatrix a = adjacency_matrix(h);
    auto jr = detail::jacobi_eigen(a.to_dense(), a.order, /*want_vectors=*/false);
    double best = jr.eigenvalues.empty() ? 0.0 : jr.eigenvalues[0];
    for (double v : jr.eigenvalues) best = std::max(best, v);
    return best;
}

/**
 * Spectral radius and principal eigenvector of a connected hypergraph.
 *
 * The power method iterates on A + sigma I with shift sigma = Delta, which
 * makes rho + sigma the dominant eigenvalue of the shifted matrix, starting
 * from the all-ones direction; rho is reported as the Rayleigh quotient of
 * the final iterate and the shift is deflated on output. The dense method
 * delegates to the Jacobi solver and reads off the top eigenpair.
 */
inline SpectralResult spectral_radius(const Hypergraph& h, double tol = 1e-12,
                                      std::size_t max_iter = 1000000,
                                      Method method = Method::power) {
    if (tol <= 0) throw std::invalid_argument("spectral_radius: tol must be positive");
    if (!is_connected(h) || h.vertex_count() == 0) {
        throw Disconnected("spectral_radius requires a connected hypergraph");
    }
    const std::size_t n = h.vertex_count();

    if (method == Method::dense) {
        if (n > 2000) throw TooLarge("dense method limited to n <= 2000");
        AdjMatrix a = adjacency_matrix(h);
        auto jr = detail::jacobi_eigen(a.to_dense(), n, /*want_vectors=*/true);
        std::size_t best = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (jr.eigenvalues[i] > jr.eigenvalues[best]) best = i;
        }
        SpectralResult r;
        r.rho = jr.eigenvalues[best];
        r.eigvec.resize(n);
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            r.eigvec[i] = jr.vectors[i * n + best];
            sum += r.eigvec[i];
        }
        if (sum < 0) {
            for (double& v : r.eigvec) v = -v;
        }
        double norm = std::sqrt(detail::dot(r.eigvec, r.eigvec));
        for (double& v : r.eigvec) v /= norm;
        r.iterations = jr.sweeps;
        r.residual = detail::inf_residual(apply_adjacency(h, r.eigvec), r.rho, r.eigvec);
        return r;
    }

    const double sigma = static_cast<double>(degree_profile(h).Delta);
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (std::size_t it = 1; it <= max_iter; ++it) {
        std::vector<double> y = apply_adjacency(h, x);
        for (std::size_t i = 0; i < n; ++i) y[i] += sigma * x[i];
        double rho_shifted = detail::dot(x, y);  // x has unit norm
        double residual = detail::inf_residual(y, rho_shifted, x);
        if (residual <= tol) {
            return SpectralResult{rho_shifted - sigma, std::move(x), it, residual};
        }
        double norm = std::sqrt(detail::dot(y, y));
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    }
    throw NoConvergence("power iteration: no convergence within max_iter");
}

/**
 * Collatz-Wielandt bounds from a strictly positive test vector:
 *   min_v (Ay)_v / y_v  <=  rho  <=  max_v (Ay)_v / y_v,
 * with either bound tight iff y is the principal eigenvector.
 */
inline std::pair<double, double> collatz_wielandt(const Hypergraph& h,
                                                  const std::vector<double>& y) {
    if (y.size() != h.vertex_count()) {
        throw std::invalid_argument("collatz_wielandt: vector size mismatch");
    }
    for (double v : y) {
        if (!(v > 0.0)) throw NonPositiveVector("test vector must be strictly positive");
    }
    if (!is_connected(h) || h.vertex_count() == 0) {
        throw Disconnected("collatz_wielandt requires a connected hypergraph");
    }
    std::vector<double> ay = apply_adjacency(h, y);
    double lo = ay[0] / y[0], hi = lo;
    for (std::size_t i = 1; i < y.size(); ++i) {
        double q = ay[i] / y[i];
        lo = std::min(lo, q);
        hi = std::max(hi, q);
    }
    return {lo, hi};
}

/// Degree bounds delta <= rho <= Delta, each equality iff the hypergraph is
/// regular (row sums of the adjacency matrix equal vertex degrees).
struct RowSumBounds {
    std::uint32_t delta = 0;
    std::uint32_t Delta = 0;
    bool regular = false;
};

inline RowSumBounds row_sum_bounds(const Hypergraph& h) {
    if (!is_connected(h) || h.vertex_count() == 0) {
        throw Disconnected("row_sum_bounds requires a connected hypergraph");
    }
    DegreeProfile p = degree_profile(h);
    return RowSumBounds{p.delta, p.Delta, p.regular};
}

} // namespace hypergraph

#endif // HYPERGRAPH_SPECTRAL_HPP
