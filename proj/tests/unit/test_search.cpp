#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "bnkit/random.hpp"
#include "bnkit/search.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace bnkit;
using namespace bnkit::testing;

TEST(Rng, PortableStream) {
    // std::mt19937_64 with the default seed must produce this 10000th value.
    std::mt19937_64 engine;
    engine.discard(9999);
    EXPECT_EQ(engine(), 9981545732273789042ULL);
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 100; ++i) EXPECT_EQ(a.below(7), b.below(7));
    Rng c(1);
    for (int i = 0; i < 1000; ++i) {
        EXPECT_LT(c.below(3), 3u);
        const double u = c.uniform();
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
    EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
    EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
    EXPECT_EQ(mix64(0), 0xe220a8397b1dcdafULL);
}

TEST(Family, CountsAndOrder) {
    const auto fam = multipartite_family(12, 12);
    EXPECT_EQ(fam.size(), 259u);
    const auto small = multipartite_family(4, 4);
    std::vector<std::string> names;
    for (const auto& p : small) names.push_back(p.to_string());
    EXPECT_EQ(names, (std::vector<std::string>{"1,1", "2,1", "1,1,1", "2,2", "3,1", "2,1,1", "1,1,1,1"}));
    EXPECT_EQ(multipartite_family(30, 6).size(), multipartite_family(30, 6).size());
}

TEST(Sweep, NoViolationsAndDeterministic) {
    const SweepResult one = sweep_multipartite(20, 5, 1);
    const SweepResult many = sweep_multipartite(20, 5, 4);
    EXPECT_EQ(one.summary.violations, 0u);
    ASSERT_EQ(one.reports.size(), many.reports.size());
    for (std::size_t i = 0; i < one.reports.size(); ++i) {
        EXPECT_EQ(one.reports[i].source, many.reports[i].source);
        EXPECT_EQ(one.reports[i].gap, many.reports[i].gap);
    }
    EXPECT_EQ(one.summary.min_gap, many.summary.min_gap);
    EXPECT_EQ(one.summary.reports, one.reports.size());
}

TEST(Summary, AddAndMerge) {
    RunSummary a;
    a.add(bn_report(cycle_graph(5), "c5"));
    a.add(bn_report(complete_graph(4), "k4"));
    a.add(bn_report(Graph(3), "empty"));
    EXPECT_EQ(a.reports, 3u);
    EXPECT_EQ(a.holds, 1u);
    EXPECT_EQ(a.excluded, 1u);
    EXPECT_EQ(a.out_of_domain, 1u);
    EXPECT_EQ(a.argmin_source, "c5");
    RunSummary b;
    b.add(bn_report(complete_multipartite(PartSizes({2, 2, 2})), "k222"));
    a.merge(b);
    EXPECT_EQ(a.reports, 4u);
    EXPECT_EQ(a.equality, 1u);
    EXPECT_EQ(a.argmin_source, "k222");
}

TEST(Exhaustive, BuiltinSmallOrders) {
    const std::size_t expected[] = {0, 1, 2, 8, 64, 1024, 32768};
    for (std::size_t n = 1; n <= 5; ++n) {
        const ExhaustiveResult r = exhaustive_check(n, 2);
        EXPECT_EQ(r.graphs, expected[n]);
        EXPECT_EQ(r.reports.size(), expected[n] - 1);
        EXPECT_TRUE(r.violations.empty());
    }
    EXPECT_THROW(exhaustive_check(kMaxBuiltinOrder + 1), std::invalid_argument);
    EXPECT_THROW(exhaustive_check(std::size_t{0}), std::invalid_argument);
}

TEST(Exhaustive, Graph6Corpus) {
    std::ifstream in(data_path("graphs_upto8.g6"));
    ASSERT_TRUE(in);
    const ExhaustiveResult r = exhaustive_check(in, 0);
    EXPECT_EQ(r.graphs, 13598u);
    EXPECT_TRUE(r.malformed.empty());
    EXPECT_TRUE(r.violations.empty());
}

TEST(Exhaustive, MalformedLinesAreCollected) {
    std::istringstream in("D~{\nnot-a-graph\nDhc\n");
    const ExhaustiveResult r = exhaustive_check(in);
    EXPECT_EQ(r.graphs, 2u);
    ASSERT_EQ(r.malformed.size(), 1u);
    EXPECT_EQ(r.malformed[0].line, 2u);
    EXPECT_EQ(r.reports[1].source, "graph6:line=3");
    EXPECT_TRUE(r.reports[0].excluded);
}

TEST(RandomK4Free, AlwaysK4Free) {
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        Rng rng(seed);
        const std::size_t n = 4 + rng.below(21);
        const auto method = seed % 2 == 0 ? K4FreeMethod::tripartite_subgraph : K4FreeMethod::greedy_insertion;
        const auto gen = random_k4_free(n, rng.uniform(), seed, method, seed % 4 == 1);
        ASSERT_TRUE(is_k4_free(gen.graph)) << "seed " << seed;
    }
}

TEST(RandomK4Free, DensityAndDeterminism) {
    const auto a = random_k4_free(30, 0.4, 7, K4FreeMethod::greedy_insertion);
    const auto b = random_k4_free(30, 0.4, 7, K4FreeMethod::greedy_insertion);
    EXPECT_EQ(a.graph, b.graph);
    EXPECT_TRUE(a.density_reached);
    EXPECT_NEAR(a.density, 0.4, 0.01);
    // Above the Turan density 2/3 the target cannot be met.
    const auto full = random_k4_free(12, 0.95, 3, K4FreeMethod::tripartite_subgraph);
    EXPECT_FALSE(full.density_reached);
    EXPECT_TRUE(is_k4_free(full.graph));
    EXPECT_EQ(parse_k4_free_method("greedy"), K4FreeMethod::greedy_insertion);
    EXPECT_EQ(parse_k4_free_method("tripartite_subgraph"), K4FreeMethod::tripartite_subgraph);
    EXPECT_THROW(parse_k4_free_method("annealing"), std::invalid_argument);
    EXPECT_THROW(random_k4_free(10, 1.5, 1, K4FreeMethod::greedy_insertion), std::invalid_argument);
}

TEST(Zykov, CanDecreaseSpectralRadius) {
    // P4 = 0-1-2-3; moving vertex 1 onto the neighbourhood of 3 leaves a P3
    // and an isolated vertex, so lambda_1 falls from the golden ratio to sqrt 2.
    const Graph p4 = path_graph(4);
    const Graph z = zykov(p4, 1, 3);
    EXPECT_NEAR(eigenvalues(p4).largest(), (1 + std::sqrt(5.0)) / 2, 1e-12);
    EXPECT_NEAR(eigenvalues(z).largest(), std::sqrt(2.0), 1e-12);
    // The reverse orientation closes a 4-cycle and raises lambda_1 to 2.
    EXPECT_NEAR(eigenvalues(zykov(p4, 3, 1)).largest(), 2.0, 1e-12);
}

TEST(Zykov, TrajectoryCliqueNumberNeverIncreases) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Rng rng(seed);
        const std::size_t n = 4 + rng.below(17);
        const Graph g = random_graph(n, 0.2 + 0.6 * rng.uniform(), derive_seed(seed, 3));
        for (auto orientation : {ZykovOrientation::as_drawn, ZykovOrientation::best_of_pair}) {
            const auto t = zykov_trajectory(g, 20, seed, orientation);
            ASSERT_TRUE(t.omega_monotone()) << "seed " << seed;
            std::size_t prev = t.initial.omega;
            for (const auto& p : t.steps) {
                ASSERT_LE(p.omega, prev);
                prev = p.omega;
            }
        }
    }
}

TEST(Zykov, TrajectoryRecordsDecreases) {
    const auto t = zykov_trajectory(path_graph(4), 1, 0);
    if (!t.steps.empty() && t.steps[0].lambda1 < t.initial.lambda1 - 1e-9) {
        EXPECT_FALSE(t.lambda1_monotone());
        EXPECT_EQ(t.lambda1_decreases.front(), 1u);
        EXPECT_GT(t.worst_lambda1_drop, 1e-9);
    }
    const auto k = zykov_trajectory(complete_graph(5), 10, 0);
    EXPECT_TRUE(k.steps.empty());
    const auto a = zykov_trajectory(cycle_graph(9), 20, 5);
    const auto b = zykov_trajectory(cycle_graph(9), 20, 5);
    ASSERT_EQ(a.steps.size(), b.steps.size());
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
        EXPECT_EQ(a.steps[i].u, b.steps[i].u);
        EXPECT_EQ(a.steps[i].lambda1, b.steps[i].lambda1);
    }
}

TEST(HillClimb, ZeroIterationsReturnsInitialGraph) {
    SearchConfig cfg;
    cfg.seed = 11;
    cfg.n = 7;
    cfg.max_iters = 0;
    const auto r = hill_climb(cfg);
    EXPECT_EQ(r.iterations, 0u);
    EXPECT_EQ(r.report.m, r.best.edge_count());
    Rng rng(derive_seed(11, 0));
    EXPECT_EQ(r.best, random_graph(7, 0.5, rng.next()));
}

TEST(HillClimb, ConstrainedSixVerticesReachesEquality) {
    SearchConfig cfg;
    cfg.seed = 2024;
    cfg.n = 6;
    cfg.max_iters = 2000;
    cfg.restarts = 10;
    cfg.k4_constrained = true;
    const auto r = hill_climb(cfg);
    EXPECT_GE(r.report.gap, -1e-9);
    EXPECT_NEAR(r.report.gap, 0.0, 1e-8);
    EXPECT_TRUE(is_k4_free(r.best));
    EXPECT_FALSE(r.report.violation());
}

TEST(HillClimb, UnconstrainedFiveVertices) {
    SearchConfig cfg;
    cfg.seed = 5;
    cfg.n = 5;
    cfg.max_iters = 2000;
    cfg.restarts = 5;
    const auto r = hill_climb(cfg);
    EXPECT_FALSE(r.best.is_complete());
    EXPECT_NEAR(r.report.gap, 0.0, 1e-8);
}

TEST(HillClimb, DeterministicAcrossThreadCounts) {
    SearchConfig cfg;
    cfg.seed = 77;
    cfg.n = 8;
    cfg.max_iters = 300;
    cfg.restarts = 4;
    const auto a = hill_climb(cfg);
    cfg.threads = 4;
    const auto b = hill_climb(cfg);
    EXPECT_EQ(a.best, b.best);
    EXPECT_EQ(a.objective, b.objective);
    EXPECT_EQ(a.best_restart, b.best_restart);
    EXPECT_EQ(a.evaluations, b.evaluations);
}

TEST(HillClimb, ObjectiveAndValidation) {
    EXPECT_EQ(search_objective(complete_graph(4), SearchObjective::bn_gap_negated, false),
              -std::numeric_limits<double>::infinity());
    EXPECT_EQ(search_objective(Graph(4), SearchObjective::lambda1, false), -std::numeric_limits<double>::infinity());
    Graph k4_plus = complete_graph(5);
    k4_plus.remove_edge(0, 1);
    EXPECT_EQ(search_objective(k4_plus, SearchObjective::lambda1, true), -std::numeric_limits<double>::infinity());
    EXPECT_GT(search_objective(k4_plus, SearchObjective::lambda1, false), 3.0);
    SearchConfig bad;
    bad.n = 1;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    bad.n = 5;
    bad.restarts = 0;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    bad.restarts = 1;
    bad.weights = {0, 0, 0};
    EXPECT_THROW(bad.validate(), std::invalid_argument);
}

// One of the two orientations always keeps lambda_1: moving the vertex with
// the smaller Perron entry onto the other cannot lower the Rayleigh quotient.
TEST(Zykov, BestOfPairIsMonotone) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        Rng rng(derive_seed(seed, 8));
        const std::size_t n = 3 + rng.below(18);
        const Graph g = random_graph(n, 0.15 + 0.7 * rng.uniform(), rng.next());
        const auto t = zykov_trajectory(g, 20, seed, ZykovOrientation::best_of_pair);
        ASSERT_TRUE(t.lambda1_monotone()) << "seed " << seed << " drop " << t.worst_lambda1_drop;
    }
}
