#include "bnkit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bnkit {

double Spectrum::spectral_radius() const {
    if (values.empty()) return 0.0;
    return std::max(std::abs(values.front()), std::abs(values.back()));
}

SymmetricMatrix adjacency_matrix(const Graph& g) {
    SymmetricMatrix a(g.vertex_count());
    for (const auto& [u, v] : g.edges()) a.set_symmetric(u, v, 1.0);
    return a;
}

Spectrum eigenvalues(const Graph& g, double tol) {
    return Spectrum{symmetric_eigenvalues(adjacency_matrix(g)), g.edge_count(), tol};
}

double power_sum(const std::vector<double>& values, int k) {
    double sum = 0.0;
    for (double x : values) sum += std::pow(x, k);
    return sum;
}

TraceReport trace_check(const Spectrum& s) {
    TraceReport r;
    const double two_m = 2.0 * static_cast<double>(s.source_m);
    r.sum_residual = std::abs(power_sum(s.values, 1));
    r.square_residual = std::abs(power_sum(s.values, 2) - two_m);
    r.sum_limit = s.tol * static_cast<double>(s.values.size());
    r.square_limit = s.tol * std::max(1.0, two_m);
    r.pass = r.sum_residual <= r.sum_limit && r.square_residual <= r.square_limit;
    return r;
}

double cubic_trace_residual(const Spectrum& s, std::size_t triangles) {
    return std::abs(power_sum(s.values, 3) - 6.0 * static_cast<double>(triangles));
}

namespace {

SymmetricMatrix difference_matrix(const Graph& g, const Graph& h, std::size_t& changed) {
    if (g.vertex_count() != h.vertex_count()) {
        throw std::invalid_argument("weyl_check needs graphs on the same vertex count");
    }
    const std::size_t n = g.vertex_count();
    SymmetricMatrix e(n);
    changed = 0;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const int diff = int{g.adjacent(u, v)} - int{h.adjacent(u, v)};
            if (diff != 0) {
                e.set_symmetric(u, v, diff);
                ++changed;
            }
        }
    }
    return e;
}

}  // namespace

double difference_norm(const Graph& g, const Graph& h) {
    std::size_t changed = 0;
    SymmetricMatrix e = difference_matrix(g, h, changed);
    if (changed == 0) return 0.0;
    const auto ev = symmetric_eigenvalues(std::move(e));
    return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

WeylReport weyl_check(const Graph& g, const Graph& h, double tol) {
    WeylReport r;
    SymmetricMatrix e = difference_matrix(g, h, r.symmetric_difference);
    if (r.symmetric_difference != 0) {
        const auto ev = symmetric_eigenvalues(std::move(e));
        r.spectral_norm = std::max(std::abs(ev.front()), std::abs(ev.back()));
    }
    r.frobenius_norm = std::sqrt(2.0 * static_cast<double>(r.symmetric_difference));

    const Spectrum sg = eigenvalues(g);
    const Spectrum sh = eigenvalues(h);
    r.deviations.resize(sg.size());
    for (std::size_t k = 0; k < sg.size(); ++k) {
        r.deviations[k] = std::abs(sg.values[k] - sh.values[k]);
        r.max_deviation = std::max(r.max_deviation, r.deviations[k]);
    }
    r.holds = r.max_deviation <= r.spectral_norm + tol;
    return r;
}

}  // namespace bnkit
