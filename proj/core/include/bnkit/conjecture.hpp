#pragma once

#include <cstddef>
#include <string>

#include "bnkit/graph.hpp"
#include "bnkit/multipartite.hpp"
#include "bnkit/spectral.hpp"

namespace bnkit {

struct BnTolerances {
    double gap = 1e-9;       // holds <=> gap >= -gap_tol
    double equality = 1e-9;  // relative to max(1, bound)
};

enum class BnStatus {
    evaluated,
    out_of_domain,  // omega < 2: edgeless graphs and n = 1
};

/// Every quantity of the inequality
/// lambda_1^2 + lambda_2^2 <= 2 (1 - 1/omega) m for one graph.
struct BnReport {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t omega = 0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda_n = 0.0;
    double bound = 0.0;  // 2 (1 - 1/omega) m
    double lhs = 0.0;    // lambda_1^2 + lambda_2^2
    double gap = 0.0;    // bound - lhs
    bool holds = false;
    bool equality = false;
    bool excluded = false;  // the graph is complete, where the inequality does not apply
    std::string source;
    BnStatus status = BnStatus::evaluated;

    /// A counterexample: evaluated, not complete, and gap < -tol.
    bool violation() const noexcept { return status == BnStatus::evaluated && !excluded && !holds; }
};

/// Fills bound, lhs, gap, holds and equality from the other fields.
void finish_report(BnReport& report, const BnTolerances& tol = {});

BnReport bn_report(const Graph& g, std::string source = "graph", const BnTolerances& tol = {});
/// Same report for K_{n_1,...,n_r} from the exact secular spectrum.
BnReport bn_report_multipartite(const PartSizes& parts, const BnTolerances& tol = {});

struct SpectralTuranReport {
    std::size_t omega = 0;
    double lambda1 = 0.0;
    double bound = 0.0;  // sqrt(2 (1 - 1/omega) m)
    double slack = 0.0;  // bound - lambda1
    bool holds = false;
};

/// Requires m >= 1; throws std::domain_error otherwise.
SpectralTuranReport spectral_turan_check(const Graph& g, double tol = 1e-9);

/// -n lambda_n / (lambda_1 - lambda_n). Throws std::domain_error on an
/// edgeless graph.
double hoffman_bound(const Graph& g);

enum class CheckStatus { pass, fail, not_applicable };

const char* to_string(CheckStatus status) noexcept;

/// Preconditions shared by the two independence-number diagnostics:
/// K4-free, 3 alpha >= n, m >= 1.
struct IndependenceRegime {
    bool k4_free = false;
    std::size_t alpha = 0;
    bool alpha_large = false;  // 3 alpha >= n, in exact integers
    bool applicable = false;
    std::string reason;  // why not applicable
};

IndependenceRegime independence_regime(const Graph& g);

struct HoffmanRatioReport {
    CheckStatus status = CheckStatus::not_applicable;
    std::string reason;
    double lambda1 = 0.0;
    double lambda_n = 0.0;
    double ratio = 0.0;  // |lambda_n| / lambda_1; at least 1/2 in this regime
};

HoffmanRatioReport hoffman_ratio_check(const Graph& g, double tol = 1e-9);

/// The Hoffman-energy bound B = 2m - lambda_1^2 / 4 and why it cannot reach
/// 4m/3 on K4-free graphs.
struct ObstructionReport {
    CheckStatus status = CheckStatus::not_applicable;
    std::string reason;
    double energy_bound = 0.0;  // B
    double lhs = 0.0;
    double four_thirds_m = 0.0;
    double lambda1_sq = 0.0;
    double eight_thirds_m = 0.0;
    bool lhs_within_bound = false;    // lhs <= B
    bool bound_exceeds_target = false;  // B > 4m/3
    bool below_threshold = false;     // lambda_1^2 < 8m/3
};

/// Not applicable outside the independence regime, for K3, and for n < 3
/// (where lambda_2 and lambda_n are the same eigenvalue).
ObstructionReport obstruction_report(const Graph& g, double tol = 1e-9);

}  // namespace bnkit
