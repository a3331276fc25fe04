#include <doctest.h>

#include <hypergraph/canonical.hpp>
#include <hypergraph/generators.hpp>
#include <hypergraph/spectral.hpp>

#include "oracles.hpp"

using namespace hypergraph;

TEST_CASE("hyperpath") {
    auto one = hyperpath(3, 1);
    CHECK(one.vertex_count() == 3);
    CHECK(one.edge_count() == 1);

    auto p7 = hyperpath(3, 3);
    CHECK(p7.vertex_count() == 7);
    auto prof = degree_profile(p7);
    CHECK(std::count(prof.degrees.begin(), prof.degrees.end(), 2u) == 2);

    CHECK(hyperpath(4, 2).vertex_count() == 7);

    // consecutive edges share exactly one vertex, non-consecutive none
    for (std::size_t k = 2; k <= 5; ++k) {
        auto p = hyperpath(k, 4);
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = i + 1; j < 4; ++j) {
                Edge common;
                std::set_intersection(p.edge(i).begin(), p.edge(i).end(),
                                      p.edge(j).begin(), p.edge(j).end(),
                                      std::back_inserter(common));
                CHECK(common.size() == (j == i + 1 ? 1 : 0));
            }
        }
    }
}

TEST_CASE("superstar") {
    auto s = superstar(3, 3);
    CHECK(s.vertex_count() == 7);
    CHECK(degree_profile(s).degrees[0] == 3);

    CHECK(superstar(3, 1) == hyperpath(3, 1));

    auto s9 = superstar(5, 2);
    CHECK(s9.vertex_count() == 9);
    CHECK(degree_profile(s9).degrees[0] == 2);
}

TEST_CASE("double_hyperstar") {
    CHECK(are_isomorphic(double_hyperstar(3, 1, 1), hyperpath(3, 3)));

    auto d = double_hyperstar(3, 2, 1);
    CHECK(d.edge_count() == 4);
    CHECK(d.vertex_count() == 9);

    auto d4 = double_hyperstar(4, 2, 2);
    auto prof = degree_profile(d4);
    CHECK(prof.degrees[0] == 3);
    CHECK(prof.degrees[1] == 3);

    CHECK(canonical_code(double_hyperstar(3, 3, 1)) ==
          canonical_code(double_hyperstar(3, 1, 3)));
    CHECK(canonical_code(double_hyperstar(4, 2, 1)) ==
          canonical_code(double_hyperstar(4, 1, 2)));
}

TEST_CASE("generator outputs are supertrees with the count identity") {
    for (std::size_t k = 3; k <= 5; ++k) {
        for (std::size_t m = 1; m <= 4; ++m) {
            for (const Hypergraph& h : {hyperpath(k, m), superstar(k, m)}) {
                CHECK(is_supertree(h));
                CHECK(h.vertex_count() == h.edge_count() * (k - 1) + 1);
            }
        }
        auto d = double_hyperstar(k, 2, 1);
        CHECK(is_supertree(d));
        CHECK(d.vertex_count() == d.edge_count() * (k - 1) + 1);
    }
}

TEST_CASE("graft") {
    auto trivial = Hypergraph::from_edge_list(1, {});

    // a bare path between two trivial ends
    auto line = graft({trivial, 0, 0, 3, trivial, 0, 3});
    CHECK(are_isomorphic(line, hyperpath(3, 3)));

    // two pendant attachments at one vertex of a 3-edge: the 3-superstar
    auto d = Hypergraph::from_edge_list(3, {{0, 1, 2}});
    auto spider = graft({d, 0, 1, 1, trivial, 0, 3});
    CHECK(are_isomorphic(spider, superstar(3, 3)));

    CHECK_THROWS_AS(graft({d, 5, 1, 1, trivial, 0, 3}), InvalidAttachment);
    CHECK_THROWS_AS(graft({d, 0, 0, 0, trivial, 0, 3}), InvalidAttachment);
    CHECK_THROWS_AS(graft({d, 0, 1, 1, trivial, 3, 3}), InvalidAttachment);
}

TEST_CASE("graft with p = 0 equals the direct connecting-path build") {
    auto d = Hypergraph::from_edge_list(3, {{0, 1, 2}});
    auto h = Hypergraph::from_edge_list(3, {{0, 1, 2}});
    auto joined = graft({d, 0, 0, 2, h, 0, 3});
    // direct build: 3-edge, path edges {0,3,4}, {4,5,6}, far 3-edge at 6
    auto direct = Hypergraph::from_edge_list(
        9, {{0, 1, 2}, {0, 3, 4}, {4, 5, 6}, {6, 7, 8}});
    CHECK(is_supertree(joined));
    CHECK(canonical_code(joined) == canonical_code(direct));
}

TEST_CASE("branch_split") {
    auto trivial = Hypergraph::from_edge_list(1, {});

    // L0 = 2 with one branch of length 1 at the first edge's interior:
    // three edges forming a chain, so the code equals P(7,3)
    auto g2 = branch_split(trivial, 0, 3, 2, {1});
    CHECK(is_supertree(g2));
    CHECK(g2.edge_count() == 3);
    CHECK(are_isomorphic(g2, hyperpath(3, 3)));

    CHECK_THROWS_AS(branch_split(trivial, 0, 3, 2, {1, 1}), TooManyBranches);
    CHECK_THROWS_AS(branch_split(trivial, 0, 3, 2, {2}), BranchTooLong);
    CHECK_THROWS_AS(branch_split(trivial, 3, 3, 2, {1}), InvalidAttachment);
}

TEST_CASE("branch_split attachment choice is immaterial up to isomorphism") {
    auto trivial = Hypergraph::from_edge_list(1, {});
    // k = 4: library attaches branches at the two lowest interiors {1, 2};
    // hand-build the same shape attached at interiors {2, 3} instead
    auto lib = branch_split(trivial, 0, 4, 2, {1, 1});
    auto alt = Hypergraph::from_edge_list(
        13, {{0, 1, 2, 3}, {3, 4, 5, 6}, {2, 7, 8, 9}, {1, 10, 11, 12}});
    CHECK(canonical_code(lib) == canonical_code(alt));
}

TEST_CASE("edge_shift") {
    auto p7 = hyperpath(3, 3);  // edges {0,1,2},{2,3,4},{4,5,6}

    // move edge 2 from joint 4 to the opposite joint 2: the superstar at 2
    auto shifted = edge_shift(p7, {{2, {4}, {2}}});
    CHECK(are_isomorphic(shifted, superstar(3, 3)));
    CHECK(spectral_radius(shifted).rho > spectral_radius(p7).rho);

    CHECK_THROWS_AS(edge_shift(p7, {{9, {4}, {2}}}), EdgeNotFound);
    CHECK_THROWS_AS(edge_shift(p7, {{2, {4}, {4}}}), ResultingDuplicateEdge);
    CHECK_THROWS_AS(edge_shift(p7, {{2, {4, 5}, {2}}}), BadShiftShape);
    CHECK_THROWS_AS(edge_shift(p7, {{2, {4, 5, 6}, {0, 1, 2}}}), BadShiftShape);
    CHECK_THROWS_AS(edge_shift(p7, {{2, {1}, {2}}}), BadShiftShape);   // 1 not in edge
    CHECK_THROWS_AS(edge_shift(p7, {{2, {4}, {9}}}), BadShiftShape);   // 9 not a vertex
    CHECK_THROWS_AS(edge_shift(p7, {{2, {5}, {6}}}), BadShiftShape);   // target kept in edge
    CHECK_THROWS_AS(edge_shift(p7, {{0, {0, 1}, {3, 4}}}), ResultingDuplicateEdge);

    // a double shift: both outer edges of P(9,3) re-attached at the center
    auto p9 = hyperpath(3, 4);  // {0,1,2},{2,3,4},{4,5,6},{6,7,8}
    auto doubled = edge_shift(p9, {{0, {2}, {4}}, {3, {6}, {4}}});
    CHECK(doubled.vertex_count() == 9);
    CHECK(is_connected(doubled));
    CHECK(degree_profile(doubled).Delta == 4);
}

TEST_CASE("edge_shift quadratic-form difference identity") {
    // x'(A' - A)x = 2/(k-1) * sum over shifted edges of (x_{e'} - x_e)
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> coord(0.1, 1.0);
    auto h = hyperpath(3, 3);
    auto shifted = edge_shift(h, {{2, {4}, {2}}});
    for (int round = 0; round < 20; ++round) {
        std::vector<double> x(h.vertex_count());
        for (double& v : x) v = coord(rng);
        auto ax = apply_adjacency(h, x);
        auto bx = apply_adjacency(shifted, x);
        double diff = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) diff += x[i] * (bx[i] - ax[i]);
        double predicted =
            (edge_quadratic(x, shifted.edge(2)) - edge_quadratic(x, h.edge(2))) * 2.0 / 2.0;
        CHECK(diff == doctest::Approx(predicted).epsilon(1e-12));
    }
}

TEST_CASE("edge_shift toward the maximum-entry vertex increases rho") {
    // e'_2 = (e_2 minus {v1}) + {u} with u the max-entry vertex
    auto p9 = hyperpath(3, 4);
    auto x = spectral_radius(p9).eigvec;
    Vertex u = 0;
    for (Vertex v = 1; v < p9.vertex_count(); ++v) {
        if (x[v] > x[u]) u = v;
    }
    CHECK(u == 4);  // the central joint carries the maximum entry
    auto shifted = edge_shift(p9, {{0, {2}, {u}}});
    CHECK(spectral_radius(shifted).rho > spectral_radius(p9).rho + 1e-10);
}
