#include "bnkit/stability.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "bnkit/parallel.hpp"
#include "bnkit/random.hpp"
#include "bnkit/spectral.hpp"

namespace bnkit {

const char* to_string(EditMethod method) noexcept {
    return method == EditMethod::exact ? "exact" : "local_search";
}

std::size_t tripartite_edit_cost(const Graph& g, const std::vector<std::uint8_t>& assignment) {
    const std::size_t n = g.vertex_count();
    if (assignment.size() != n) throw std::invalid_argument("assignment length mismatch");
    std::size_t within = 0;
    std::array<std::size_t, 3> sizes{};
    for (Vertex u = 0; u < n; ++u) {
        ++sizes.at(assignment[u]);
        for (Vertex v = u + 1; v < n; ++v) {
            if (assignment[u] == assignment[v] && g.adjacent(u, v)) ++within;
        }
    }
    std::size_t within_pairs = 0;
    for (std::size_t s : sizes) within_pairs += s * (s - (s > 0 ? 1 : 0)) / 2;
    const std::size_t cross_pairs = n * (n - 1) / 2 - within_pairs;
    const std::size_t cross_edges = g.edge_count() - within;
    return within + (cross_pairs - cross_edges);
}

namespace {

EditResult make_result(std::vector<std::uint8_t> assignment, std::size_t edits, std::size_t n, EditMethod method) {
    return EditResult{std::move(assignment), edits,
                      static_cast<double>(edits) / (static_cast<double>(n) * static_cast<double>(n)), method};
}

}  // namespace

namespace {

// Depth-first search over assignments of vertices 0, 1, ... in order. Parts
// are interchangeable, so only restricted-growth labelings are visited (a
// vertex may open part k only when parts 0..k-1 are in use); the
// lexicographically smallest optimum always has this form. Placing a vertex
// never lowers the cost, so branches at or above the incumbent are cut.
struct ExactSearch {
    std::size_t n;
    std::vector<std::uint32_t> adj;
    std::array<std::uint32_t, 3> mask{};
    std::vector<std::uint8_t> current;
    std::vector<std::uint8_t> best_assignment;
    std::size_t best;

    void run(Vertex u, std::size_t used, std::size_t cost) {
        if (cost >= best) return;
        if (u == n) {
            best = cost;
            best_assignment = current;
            return;
        }
        const std::uint32_t placed = (1U << u) - 1;
        const std::size_t limit = std::min<std::size_t>(used + 1, 3);
        for (std::size_t p = 0; p < limit; ++p) {
            const std::uint32_t others = placed & ~mask[p];
            const auto added = static_cast<std::size_t>(std::popcount(adj[u] & mask[p]) +
                                                        std::popcount(others & ~adj[u]));
            current[u] = static_cast<std::uint8_t>(p);
            mask[p] |= 1U << u;
            run(u + 1, std::max(used, p + 1), cost + added);
            mask[p] &= ~(1U << u);
            if (best == 0) return;
        }
    }
};

}  // namespace

EditResult edit_distance_exact(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kMaxExactEditOrder) {
        throw std::invalid_argument("exact edit distance supports n <= " + std::to_string(kMaxExactEditOrder));
    }
    ExactSearch search{n, std::vector<std::uint32_t>(n, 0), {}, std::vector<std::uint8_t>(n, 0), {}, 0};
    for (Vertex u = 0; u < n; ++u) for_each_bit(g.row(u), [&](Vertex v) { search.adj[u] |= 1U << v; });
    // Every vertex in part 0 costs m; start just above it so that assignment
    // is still recorded when nothing beats it.
    search.best = g.edge_count() + 1;
    search.run(0, 0, 0);
    return make_result(std::move(search.best_assignment), search.best, n, EditMethod::exact);
}

namespace {

// Cost attributable to u sitting in part p, given neighbour counts and part
// sizes that exclude u.
std::size_t placement_cost(std::size_t p, const std::array<std::size_t, 3>& adj_in,
                           const std::array<std::size_t, 3>& sizes) {
    std::size_t cost = adj_in[p];
    for (std::size_t q = 0; q < 3; ++q) {
        if (q != p) cost += sizes[q] - adj_in[q];
    }
    return cost;
}

void local_descent(const Graph& g, std::vector<std::uint8_t>& a) {
    const std::size_t n = g.vertex_count();
    std::array<std::size_t, 3> sizes{};
    for (auto p : a) ++sizes[p];
    bool improved = true;
    while (improved) {
        improved = false;
        for (Vertex u = 0; u < n; ++u) {
            std::array<std::size_t, 3> adj_in{};
            for_each_bit(g.row(u), [&](Vertex v) { ++adj_in[a[v]]; });
            std::array<std::size_t, 3> others = sizes;
            --others[a[u]];
            std::size_t best_part = a[u];
            std::size_t best_cost = placement_cost(a[u], adj_in, others);
            for (std::size_t p = 0; p < 3; ++p) {
                const std::size_t c = placement_cost(p, adj_in, others);
                if (c < best_cost) {
                    best_cost = c;
                    best_part = p;
                }
            }
            if (best_part != a[u]) {
                --sizes[a[u]];
                ++sizes[best_part];
                a[u] = static_cast<std::uint8_t>(best_part);
                improved = true;
            }
        }
    }
}

std::vector<std::uint8_t> greedy_placement(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::uint8_t> a(n, 0);
    std::array<std::size_t, 3> sizes{};
    for (Vertex u = 0; u < n; ++u) {
        std::array<std::size_t, 3> adj_in{};
        for_each_bit(g.row(u), [&](Vertex v) {
            if (v < u) ++adj_in[a[v]];
        });
        std::size_t best_part = 0;
        std::size_t best_cost = placement_cost(0, adj_in, sizes);
        for (std::size_t p = 1; p < 3; ++p) {
            const std::size_t c = placement_cost(p, adj_in, sizes);
            if (c < best_cost) {
                best_cost = c;
                best_part = p;
            }
        }
        a[u] = static_cast<std::uint8_t>(best_part);
        ++sizes[best_part];
    }
    return a;
}

}  // namespace

EditResult edit_distance_local(const Graph& g, std::size_t restarts, std::uint64_t seed) {
    if (restarts == 0) throw std::invalid_argument("local search needs at least one restart");
    const std::size_t n = g.vertex_count();
    Rng rng(seed);
    std::vector<std::uint8_t> best;
    std::size_t best_cost = 0;
    for (std::size_t r = 0; r < restarts; ++r) {
        std::vector<std::uint8_t> a;
        if (r == 0) {
            a = greedy_placement(g);
        } else {
            a.resize(n);
            for (auto& p : a) p = static_cast<std::uint8_t>(rng.below(3));
        }
        local_descent(g, a);
        const std::size_t cost = tripartite_edit_cost(g, a);
        if (best.empty() || cost < best_cost) {
            best_cost = cost;
            best = std::move(a);
        }
    }
    return make_result(std::move(best), best_cost, n, EditMethod::local_search);
}

Graph perturbed_turan(std::size_t n, std::size_t k, std::uint64_t seed) {
    Graph g = turan_graph(n, std::min<std::size_t>(3, n));
    auto edges = g.edges();
    if (k > edges.size()) throw std::invalid_argument("cannot delete more edges than T(n,3) has");
    Rng rng(seed);
    rng.shuffle(std::span<Edge>(edges));
    for (std::size_t i = 0; i < k; ++i) g.remove_edge(edges[i].first, edges[i].second);
    return g;
}

std::vector<StabilityRow> stability_experiment(std::size_t n, const std::vector<std::size_t>& grid,
                                               std::size_t samples, std::uint64_t seed,
                                               const StabilityOptions& options) {
    if (n < 3) throw std::invalid_argument("stability experiment needs n >= 3");
    const bool exact = n <= kMaxExactEditOrder && !options.force_local;
    std::vector<StabilityRow> rows(grid.size() * samples);
    parallel_for(rows.size(), options.threads, [&](std::size_t index) {
        const std::size_t k = grid[index / samples];
        const std::size_t sample = index % samples;
        const std::uint64_t sample_seed = derive_seed(derive_seed(seed, k), sample);
        const Graph g = perturbed_turan(n, k, sample_seed);
        const Spectrum s = eigenvalues(g);
        const EditResult e = exact ? edit_distance_exact(g)
                                   : edit_distance_local(g, options.local_restarts, derive_seed(sample_seed, 1));
        StabilityRow& row = rows[index];
        row.n = n;
        row.k = k;
        row.sample = sample;
        row.m = g.edge_count();
        row.lambda1_sq_over_m = row.m == 0 ? 0.0 : s.largest() * s.largest() / static_cast<double>(row.m);
        row.edits = e.edits;
        row.edits_normalized = e.normalized;
        row.method = e.method;
        row.lambda2 = s.second();
    });
    return rows;
}

DenseCaseReport dense_case_check(const Graph& g, double c, double delta) {
    if (!(c > 0.0)) throw std::invalid_argument("dense-case constant c must be positive");
    DenseCaseReport r;
    r.c = c;
    r.delta = delta;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    const double n = static_cast<double>(r.n);
    const double m = static_cast<double>(r.m);
    if (g.is_complete()) {
        r.reason = "graph is complete";
        return r;
    }
    if (!is_k4_free(g)) {
        r.reason = "graph contains K4";
        return r;
    }
    if (m < c * n * n) {
        r.reason = "m < c n^2";
        return r;
    }
    const Spectrum s = eigenvalues(g);
    r.lambda1_sq = s.largest() * s.largest();
    r.regime = r.lambda1_sq > (4.0 / 3.0 - delta) * m ? 1 : 2;
    r.triangles = triangle_count(g);
    const double d = 2.0 * m / n;
    r.triangle_bound = n * d * d / 12.0;
    r.triangle_bound_holds = static_cast<double>(r.triangles) <= r.triangle_bound + 1e-9;
    r.lambda2_cubed = s.second() * s.second() * s.second();
    r.lambda2_cubed_bound = 2.0 * m * m / n;
    r.lambda2_bound_holds = r.lambda2_cubed <= r.lambda2_cubed_bound + 1e-9;
    r.bn = bn_report(g, "dense-check");
    r.status = r.bn.holds ? CheckStatus::pass : CheckStatus::fail;
    return r;
}

}  // namespace bnkit
