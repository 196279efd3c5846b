#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <string>
#include <vector>

#include "bnkit/conjecture.hpp"
#include "bnkit/graph.hpp"

namespace bnkit {

/// Counts over one family of reports. min_gap ranges over evaluated,
/// non-excluded reports; argmin keeps the first source reaching it.
struct RunSummary {
    std::string family;
    std::size_t reports = 0;
    std::size_t holds = 0;
    std::size_t equality = 0;
    std::size_t excluded = 0;
    std::size_t out_of_domain = 0;
    std::size_t violations = 0;
    double min_gap = std::numeric_limits<double>::infinity();
    std::string argmin_source;

    void add(const BnReport& r);
    void merge(const RunSummary& other);
};

// ---------------------------------------------------------------------------
// Complete multipartite sweep

/// Partitions of every n in [2, n_max] into 2 <= r <= min(r_max, n) parts,
/// ordered by n, then r, then lexicographically (parts non-increasing).
std::vector<PartSizes> multipartite_family(std::size_t n_max, std::size_t r_max);

struct SweepResult {
    std::vector<BnReport> reports;
    RunSummary summary;
};

SweepResult sweep_multipartite(std::size_t n_max, std::size_t r_max, std::size_t threads = 1,
                               const BnTolerances& tol = {});

// ---------------------------------------------------------------------------
// Exhaustive verification

inline constexpr std::size_t kMaxBuiltinOrder = 6;

struct MalformedLine {
    std::size_t line;
    std::string message;
};

struct ExhaustiveResult {
    std::size_t graphs = 0;
    /// Reports for every graph with m >= 1, in input order.
    std::vector<BnReport> reports;
    std::vector<BnReport> violations;
    std::vector<MalformedLine> malformed;
    RunSummary summary;
};

/// Every labeled graph on n vertices (2^C(n,2) of them, no isomorphism
/// reduction), n <= kMaxBuiltinOrder.
ExhaustiveResult exhaustive_check(std::size_t n, std::size_t threads = 1, const BnTolerances& tol = {});
/// One graph6 record per line; malformed lines are collected, not fatal.
ExhaustiveResult exhaustive_check(std::istream& graph6, std::size_t threads = 1, const BnTolerances& tol = {});

// ---------------------------------------------------------------------------
// Random K4-free graphs

enum class K4FreeMethod {
    tripartite_subgraph,  // random 3-partition, keep cross pairs with probability p
    greedy_insertion,     // shuffled pairs, insert unless a K4 appears
};

const char* to_string(K4FreeMethod method) noexcept;
K4FreeMethod parse_k4_free_method(const std::string& name);

struct GeneratedGraph {
    Graph graph;
    bool density_reached = true;  // false: target unreachable, best effort returned
    double density = 0.0;         // achieved m / C(n, 2)
};

/// density is m / C(n, 2) in [0, 1]. balanced_parts forces part sizes
/// floor/ceil(n/3) for the tripartite method.
GeneratedGraph random_k4_free(std::size_t n, double density, std::uint64_t seed, K4FreeMethod method,
                              bool balanced_parts = false);

/// Erdos-Renyi G(n, p) with the portable generator.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Zykov trajectories

enum class ZykovOrientation {
    as_drawn,     // Z(G; u, v) for the uniformly drawn ordered pair
    best_of_pair  // whichever of Z(G; u, v), Z(G; v, u) has the larger lambda_1
};

struct TrajectoryPoint {
    Vertex u = 0;
    Vertex v = 0;
    double lambda1 = 0.0;
    std::size_t omega = 0;
    std::size_t m = 0;
};

struct ZykovTrajectory {
    TrajectoryPoint initial;
    std::vector<TrajectoryPoint> steps;
    /// Steps where lambda_1 dropped by more than tol (1-based step index).
    std::vector<std::size_t> lambda1_decreases;
    /// Steps where omega increased.
    std::vector<std::size_t> omega_increases;
    double worst_lambda1_drop = 0.0;

    bool lambda1_monotone() const noexcept { return lambda1_decreases.empty(); }
    bool omega_monotone() const noexcept { return omega_increases.empty(); }
};

/// Applies `steps` Zykov operations on uniformly drawn ordered non-adjacent
/// pairs. A complete input yields an empty trajectory.
ZykovTrajectory zykov_trajectory(const Graph& g, std::size_t steps, std::uint64_t seed,
                                 ZykovOrientation orientation = ZykovOrientation::as_drawn, double tol = 1e-9);

// ---------------------------------------------------------------------------
// Counterexample hill climbing

enum class SearchObjective { bn_gap_negated, lambda1 };

struct MoveWeights {
    double edge_add = 1.0;
    double edge_delete = 1.0;
    double zykov = 1.0;
};

struct SearchConfig {
    std::uint64_t seed = 0;
    std::size_t n = 6;
    std::size_t max_iters = 1000;  // move proposals per restart
    std::size_t restarts = 1;
    MoveWeights weights;
    bool k4_constrained = false;
    SearchObjective objective = SearchObjective::bn_gap_negated;
    double initial_density = 0.5;
    std::size_t threads = 1;

    /// Throws std::invalid_argument on n < 2, restarts == 0, or bad weights.
    void validate() const;
};

struct HillClimbResult {
    Graph best;
    BnReport report;
    double objective = -std::numeric_limits<double>::infinity();
    std::size_t best_restart = 0;
    std::size_t iterations = 0;
    std::size_t evaluations = 0;
    std::size_t accepted = 0;
    std::size_t sideways = 0;
    std::size_t restarts_run = 0;
};

/// Objective value of one graph; -infinity for complete, edgeless, or
/// (when constrained) K4-containing graphs.
double search_objective(const Graph& g, SearchObjective objective, bool k4_constrained);

/// First-improvement local search with sideways moves (at most n^2 in a
/// row) and seeded restarts. Restart i uses derive_seed(seed, i).
HillClimbResult hill_climb(const SearchConfig& cfg);

}  // namespace bnkit
