#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bnkit/conjecture.hpp"
#include "bnkit/graph.hpp"

namespace bnkit {

// Edit distance to the complete tripartite family T3. Parts may be empty,
// so complete bipartite and edgeless graphs are members. The cost of an
// assignment is (#edges inside a part) + (#non-edges across parts).

inline constexpr std::size_t kMaxExactEditOrder = 12;

enum class EditMethod { exact, local_search };

const char* to_string(EditMethod method) noexcept;

struct EditResult {
    std::vector<std::uint8_t> assignment;  // part index in {0, 1, 2} per vertex
    std::size_t edits = 0;
    double normalized = 0.0;  // edits / n^2
    EditMethod method = EditMethod::exact;
};

/// Cost of turning g into the complete tripartite graph with this assignment.
std::size_t tripartite_edit_cost(const Graph& g, const std::vector<std::uint8_t>& assignment);

/// Minimum over all 3^n assignments; ties go to the lexicographically
/// smallest assignment. Throws std::invalid_argument for n > 12.
EditResult edit_distance_exact(const Graph& g);

/// Best single-vertex-move local optimum over `restarts` starts. The first
/// start is the greedy sequential placement (exact on complete tripartite
/// inputs), the rest are uniform random assignments.
EditResult edit_distance_local(const Graph& g, std::size_t restarts, std::uint64_t seed);

/// T(n, 3) with k distinct edges removed uniformly at random.
Graph perturbed_turan(std::size_t n, std::size_t k, std::uint64_t seed);

struct StabilityRow {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t sample = 0;
    std::size_t m = 0;
    double lambda1_sq_over_m = 0.0;
    std::size_t edits = 0;
    double edits_normalized = 0.0;
    EditMethod method = EditMethod::exact;
    double lambda2 = 0.0;  // |lambda_2| <= sqrt(2k) by Weyl against T(n,3)
};

struct StabilityOptions {
    /// exact when n <= 12 unless forced to local search
    bool force_local = false;
    std::size_t local_restarts = 20;
    std::size_t threads = 1;
};

/// One row per (k, sample); sample j of grid point k uses
/// derive_seed(derive_seed(seed, k), j).
std::vector<StabilityRow> stability_experiment(std::size_t n, const std::vector<std::size_t>& grid,
                                               std::size_t samples, std::uint64_t seed,
                                               const StabilityOptions& options = {});

struct DenseCaseReport {
    CheckStatus status = CheckStatus::not_applicable;
    std::string reason;
    double c = 0.0;
    double delta = 0.0;
    std::size_t n = 0;
    std::size_t m = 0;
    double lambda1_sq = 0.0;
    /// 1 when lambda_1^2 > (4/3 - delta) m, else 2.
    int regime = 0;
    // Observational quantities from the dense-case argument; never asserted.
    std::size_t triangles = 0;
    double triangle_bound = 0.0;  // n d^2 / 12 with d = 2m/n
    bool triangle_bound_holds = false;
    double lambda2_cubed = 0.0;
    double lambda2_cubed_bound = 0.0;  // 2 m^2 / n
    bool lambda2_bound_holds = false;
    BnReport bn;
};

/// Applicable when g is K4-free, not K3, and m >= c n^2. status is pass or
/// fail according to the BnReport verdict only.
DenseCaseReport dense_case_check(const Graph& g, double c, double delta = 0.05);

}  // namespace bnkit
