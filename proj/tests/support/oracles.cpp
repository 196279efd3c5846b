#include "oracles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <functional>

namespace bnkit::testing {

std::vector<double> eigen_oracle(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(g.vertex_count());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [u, v] : g.edges()) {
        a(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = 1.0;
        a(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::size_t brute_clique_number(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::size_t best = 1;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size <= best) continue;
        bool clique = true;
        for (std::size_t u = 0; u < n && clique; ++u) {
            if (!((mask >> u) & 1)) continue;
            for (std::size_t v = u + 1; v < n && clique; ++v) {
                if (((mask >> v) & 1) && !g.adjacent(u, v)) clique = false;
            }
        }
        if (clique) best = size;
    }
    return best;
}

std::size_t brute_triangle_count(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::size_t count = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c)) ++count;
    return count;
}

bool brute_has_k4(const Graph& g) {
    const std::size_t n = g.vertex_count();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d)
                    if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(a, d) && g.adjacent(b, c) &&
                        g.adjacent(b, d) && g.adjacent(c, d))
                        return true;
    return false;
}

std::size_t brute_edit_distance(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    std::size_t best = n * n;
    std::vector<int> part(n);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t x = code;
        for (std::size_t i = 0; i < n; ++i) {
            part[i] = static_cast<int>(x % 3);
            x /= 3;
        }
        std::size_t cost = 0;
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                const bool same = part[u] == part[v];
                const bool edge = g.adjacent(u, v);
                if (same == edge) ++cost;
            }
        }
        best = std::min(best, cost);
    }
    return best;
}

std::vector<std::vector<int>> int_adjacency(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (const auto& [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
    return a;
}

}  // namespace bnkit::testing
