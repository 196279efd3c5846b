#include "bnkit/conjecture.hpp"

#include <cmath>
#include <stdexcept>

namespace bnkit {

void finish_report(BnReport& r, const BnTolerances& tol) {
    const double m = static_cast<double>(r.m);
    r.bound = r.omega == 0 ? 0.0 : 2.0 * (1.0 - 1.0 / static_cast<double>(r.omega)) * m;
    r.lhs = r.lambda1 * r.lambda1 + r.lambda2 * r.lambda2;
    r.gap = r.bound - r.lhs;
    if (r.status == BnStatus::out_of_domain) {
        r.holds = false;
        r.equality = false;
        return;
    }
    r.holds = r.gap >= -tol.gap;
    r.equality = std::abs(r.gap) <= tol.equality * std::max(1.0, r.bound);
}

BnReport bn_report(const Graph& g, std::string source, const BnTolerances& tol) {
    BnReport r;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.source = std::move(source);
    r.omega = clique_number(g);
    r.excluded = r.n >= 2 && g.is_complete();
    const Spectrum s = eigenvalues(g);
    r.lambda1 = s.largest();
    r.lambda2 = s.second();
    r.lambda_n = s.smallest();
    if (r.n < 2 || r.m == 0) {
        r.status = BnStatus::out_of_domain;
        r.excluded = false;
    }
    finish_report(r, tol);
    return r;
}

BnReport bn_report_multipartite(const PartSizes& parts, const BnTolerances& tol) {
    BnReport r;
    r.n = parts.vertex_count();
    r.m = parts.edge_count();
    r.omega = parts.part_count();
    r.excluded = r.n == r.omega;
    r.source = "multipartite:" + parts.to_string();
    if (parts.part_count() == 2 && r.n > 2) r.source += ";note=bipartite gap is identically zero";
    const SecularSpectrum s = multipartite_spectrum(parts);
    r.lambda1 = s.secular_roots.front();
    r.lambda2 = lambda2_multipartite(parts);
    const auto flat = s.flatten();
    r.lambda_n = flat.back();
    finish_report(r, tol);
    return r;
}

SpectralTuranReport spectral_turan_check(const Graph& g, double tol) {
    if (g.edge_count() == 0) throw std::domain_error("spectral Turan check needs at least one edge");
    SpectralTuranReport r;
    r.omega = clique_number(g);
    r.lambda1 = eigenvalues(g).largest();
    r.bound = std::sqrt(2.0 * (1.0 - 1.0 / static_cast<double>(r.omega)) * static_cast<double>(g.edge_count()));
    r.slack = r.bound - r.lambda1;
    r.holds = r.lambda1 <= r.bound + tol;
    return r;
}

double hoffman_bound(const Graph& g) {
    if (g.edge_count() == 0) throw std::domain_error("Hoffman bound needs at least one edge");
    const Spectrum s = eigenvalues(g);
    return -static_cast<double>(g.vertex_count()) * s.smallest() / (s.largest() - s.smallest());
}

const char* to_string(CheckStatus status) noexcept {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::not_applicable: return "not_applicable";
    }
    return "unknown";
}

IndependenceRegime independence_regime(const Graph& g) {
    IndependenceRegime regime;
    if (g.edge_count() == 0) {
        regime.reason = "graph has no edges";
        return regime;
    }
    regime.k4_free = is_k4_free(g);
    if (!regime.k4_free) {
        regime.reason = "graph contains K4";
        return regime;
    }
    regime.alpha = independence_number(g);
    regime.alpha_large = 3 * regime.alpha >= g.vertex_count();
    if (!regime.alpha_large) {
        regime.reason = "3 alpha < n";
        return regime;
    }
    regime.applicable = true;
    return regime;
}

HoffmanRatioReport hoffman_ratio_check(const Graph& g, double tol) {
    HoffmanRatioReport r;
    const IndependenceRegime regime = independence_regime(g);
    if (!regime.applicable) {
        r.reason = regime.reason;
        return r;
    }
    const Spectrum s = eigenvalues(g);
    r.lambda1 = s.largest();
    r.lambda_n = s.smallest();
    r.ratio = std::abs(r.lambda_n) / r.lambda1;
    r.status = std::abs(r.lambda_n) >= r.lambda1 / 2.0 - tol ? CheckStatus::pass : CheckStatus::fail;
    return r;
}

ObstructionReport obstruction_report(const Graph& g, double tol) {
    ObstructionReport r;
    if (g.vertex_count() < 3) {
        r.reason = "n < 3";
        return r;
    }
    if (g.vertex_count() == 3 && g.is_complete()) {
        r.reason = "graph is K3";
        return r;
    }
    const IndependenceRegime regime = independence_regime(g);
    if (!regime.applicable) {
        r.reason = regime.reason;
        return r;
    }
    const Spectrum s = eigenvalues(g);
    const double m = static_cast<double>(g.edge_count());
    r.lambda1_sq = s.largest() * s.largest();
    r.lhs = r.lambda1_sq + s.second() * s.second();
    r.energy_bound = 2.0 * m - r.lambda1_sq / 4.0;
    r.four_thirds_m = 4.0 * m / 3.0;
    r.eight_thirds_m = 8.0 * m / 3.0;
    r.lhs_within_bound = r.lhs <= r.energy_bound + tol;
    r.bound_exceeds_target = r.energy_bound > r.four_thirds_m - tol;
    r.below_threshold = r.lambda1_sq < r.eight_thirds_m;
    r.status = r.lhs_within_bound && r.bound_exceeds_target && r.below_threshold ? CheckStatus::pass
                                                                                  : CheckStatus::fail;
    return r;
}

}  // namespace bnkit
