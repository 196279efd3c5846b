#include <gtest/gtest.h>

#include <cmath>

#include "bnkit/random.hpp"
#include "bnkit/search.hpp"
#include "bnkit/stability.hpp"
#include "oracles.hpp"

using namespace bnkit;
using namespace bnkit::testing;

TEST(EditDistance, Examples) {
    EXPECT_EQ(edit_distance_exact(turan_graph(6, 3)).edits, 0u);
    EXPECT_EQ(edit_distance_exact(cycle_graph(5)).edits, 3u);
    EXPECT_EQ(edit_distance_exact(complete_graph(4)).edits, 1u);
    EXPECT_EQ(edit_distance_exact(complete_multipartite(PartSizes({3, 3}))).edits, 0u);
    EXPECT_EQ(edit_distance_exact(Graph(7)).edits, 0u);
    EXPECT_EQ(edit_distance_local(turan_graph(30, 3), 1, 9).edits, 0u);
    EXPECT_EQ(edit_distance_local(complete_multipartite(PartSizes({3, 3})), 3, 1).edits, 0u);
    EXPECT_THROW(edit_distance_exact(Graph(13)), std::invalid_argument);
    EXPECT_THROW(edit_distance_local(Graph(3), 0, 1), std::invalid_argument);
}

TEST(EditDistance, ResultIsConsistent) {
    const EditResult r = edit_distance_exact(cycle_graph(5));
    EXPECT_EQ(r.method, EditMethod::exact);
    EXPECT_EQ(tripartite_edit_cost(cycle_graph(5), r.assignment), r.edits);
    EXPECT_DOUBLE_EQ(r.normalized, 3.0 / 25.0);
    // Ties go to the smallest assignment in lexicographic order.
    EXPECT_EQ(r.assignment.front(), 0);
}

TEST(EditDistance, MatchesBruteForce) {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        Rng rng(seed);
        const std::size_t n = 1 + rng.below(9);
        const Graph g = random_graph(n, rng.uniform(), derive_seed(seed, 4));
        ASSERT_EQ(edit_distance_exact(g).edits, brute_edit_distance(g)) << "seed " << seed;
    }
}

TEST(EditDistance, TieBreakIsLexicographicallySmallest) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng(seed);
        const std::size_t n = 2 + rng.below(7);
        const Graph g = random_graph(n, rng.uniform(), derive_seed(seed, 5));
        const auto result = edit_distance_exact(g);
        // First optimum in lexicographic order, vertex 0 most significant.
        std::vector<std::uint8_t> a(n, 0);
        std::vector<std::uint8_t> expected;
        std::size_t best = SIZE_MAX;
        while (true) {
            const std::size_t cost = tripartite_edit_cost(g, a);
            if (cost < best) {
                best = cost;
                expected = a;
            }
            std::size_t i = n;
            while (i > 0 && a[i - 1] == 2) a[--i] = 0;
            if (i == 0) break;
            ++a[i - 1];
        }
        ASSERT_EQ(result.edits, best);
        ASSERT_EQ(result.assignment, expected) << "seed " << seed;
    }
}

TEST(EditDistance, CompleteTripartiteIsZero) {
    for (std::size_t a = 0; a <= 4; ++a)
        for (std::size_t b = 0; b <= 4; ++b)
            for (std::size_t c = 0; c <= 4; ++c) {
                const std::size_t n = a + b + c;
                if (n == 0) continue;
                Graph g(n);
                std::vector<std::uint8_t> part(n);
                for (std::size_t i = 0; i < n; ++i) part[i] = i < a ? 0 : (i < a + b ? 1 : 2);
                for (std::size_t u = 0; u < n; ++u)
                    for (std::size_t v = u + 1; v < n; ++v)
                        if (part[u] != part[v]) g.add_edge(u, v);
                ASSERT_EQ(edit_distance_exact(g).edits, 0u) << a << b << c;
                ASSERT_EQ(tripartite_edit_cost(g, part), 0u);
            }
}

TEST(EditDistance, BoundedByEditsFromTripartite) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        const std::size_t n = 3 + rng.below(8);
        Graph g = turan_graph(n, 3);
        const std::size_t k = rng.below(6);
        for (std::size_t i = 0; i < k; ++i) {
            const Vertex u = rng.below(n);
            Vertex v = rng.below(n - 1);
            if (v >= u) ++v;
            g.toggle_edge(u, v);
        }
        ASSERT_LE(edit_distance_exact(g).edits, k) << "seed " << seed;
    }
}

TEST(EditDistance, LocalNeverBeatsExact) {
    std::size_t matches = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(derive_seed(seed, 9));
        const std::size_t n = 3 + rng.below(8);
        const Graph g = random_graph(n, 0.3 + 0.5 * rng.uniform(), seed);
        const auto exact = edit_distance_exact(g);
        const auto local = edit_distance_local(g, 10, seed);
        ASSERT_GE(local.edits, exact.edits) << "seed " << seed;
        EXPECT_EQ(local.method, EditMethod::local_search);
        EXPECT_EQ(tripartite_edit_cost(g, local.assignment), local.edits);
        if (local.edits == exact.edits) ++matches;
    }
    EXPECT_GE(matches, 190u);
}

TEST(Stability, PerturbedTuran) {
    const Graph g = perturbed_turan(12, 5, 3);
    EXPECT_EQ(g.edge_count(), turan_graph(12, 3).edge_count() - 5);
    EXPECT_EQ(perturbed_turan(12, 5, 3), g);
    EXPECT_THROW(perturbed_turan(6, 13, 1), std::invalid_argument);
}

TEST(Stability, ExperimentSanity) {
    std::vector<std::size_t> grid;
    for (std::size_t k = 0; k <= 10; ++k) grid.push_back(k);
    const auto rows = stability_experiment(12, grid, 50, 42, {.threads = 0});
    ASSERT_EQ(rows.size(), grid.size() * 50);
    std::vector<double> mean(grid.size(), 0.0);
    for (const auto& r : rows) {
        EXPECT_EQ(r.method, EditMethod::exact);
        EXPECT_LE(r.edits, r.k);
        EXPECT_LE(r.edits_normalized, static_cast<double>(r.k) / 144.0);
        EXPECT_LE(std::abs(r.lambda2), std::sqrt(2.0 * static_cast<double>(r.k)) + 1e-9);
        if (r.k == 0) {
            EXPECT_NEAR(r.lambda1_sq_over_m, 4.0 / 3.0, 1e-9);
            EXPECT_EQ(r.edits, 0u);
        }
        mean[r.k] += r.edits_normalized / 50.0;
    }
    for (std::size_t k = 1; k < mean.size(); ++k) EXPECT_GE(mean[k], mean[k - 1] - 1e-12);

    const auto again = stability_experiment(12, grid, 50, 42, {.threads = 1});
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].edits, again[i].edits);
        EXPECT_EQ(rows[i].lambda1_sq_over_m, again[i].lambda1_sq_over_m);
    }
    const auto local = stability_experiment(30, {0, 4}, 3, 1);
    for (const auto& r : local) {
        EXPECT_EQ(r.method, EditMethod::local_search);
        EXPECT_LE(r.edits, r.k);
    }
}

TEST(DenseCase, Examples) {
    const auto k333 = dense_case_check(complete_multipartite(PartSizes({3, 3, 3})), 0.25);
    EXPECT_EQ(k333.status, CheckStatus::pass);
    EXPECT_TRUE(k333.bn.equality);
    EXPECT_EQ(k333.regime, 1);

    const auto c5 = dense_case_check(cycle_graph(5), 0.2);
    EXPECT_EQ(c5.status, CheckStatus::pass);
    EXPECT_EQ(c5.triangles, 0u);
    EXPECT_NEAR(c5.triangle_bound, 5.0 * 4.0 / 12.0, 1e-12);
    EXPECT_TRUE(c5.triangle_bound_holds);

    Graph g = complete_multipartite(PartSizes({2, 2, 2}));
    g.remove_edge(0, 2);
    const auto minus = dense_case_check(g, 0.25);
    EXPECT_EQ(minus.status, CheckStatus::pass);
    EXPECT_NEAR(minus.bn.gap, 0.49398961453230683, 1e-9);

    EXPECT_EQ(dense_case_check(complete_graph(4), 0.1).status, CheckStatus::not_applicable);
    EXPECT_EQ(dense_case_check(complete_graph(3), 0.1).status, CheckStatus::not_applicable);
    EXPECT_EQ(dense_case_check(cycle_graph(5), 0.3).status, CheckStatus::not_applicable);
    EXPECT_THROW(dense_case_check(cycle_graph(5), 0.0), std::invalid_argument);
}
