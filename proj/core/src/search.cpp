#include "bnkit/search.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "bnkit/graph_io.hpp"
#include "bnkit/parallel.hpp"
#include "bnkit/random.hpp"
#include "bnkit/spectral.hpp"

namespace bnkit {

void RunSummary::add(const BnReport& r) {
    ++reports;
    if (r.status == BnStatus::out_of_domain) {
        ++out_of_domain;
        return;
    }
    if (r.excluded) {
        ++excluded;
        return;
    }
    if (r.holds) ++holds;
    if (r.equality) ++equality;
    if (r.violation()) ++violations;
    if (r.gap < min_gap) {
        min_gap = r.gap;
        argmin_source = r.source;
    }
}

void RunSummary::merge(const RunSummary& other) {
    reports += other.reports;
    holds += other.holds;
    equality += other.equality;
    excluded += other.excluded;
    out_of_domain += other.out_of_domain;
    violations += other.violations;
    if (other.min_gap < min_gap) {
        min_gap = other.min_gap;
        argmin_source = other.argmin_source;
    }
}

// ---------------------------------------------------------------------------

namespace {

void partitions_into(std::size_t remaining, std::size_t parts, std::size_t max_part, std::vector<std::size_t>& prefix,
                     std::vector<PartSizes>& out) {
    if (parts == 0) {
        if (remaining == 0) out.emplace_back(prefix);
        return;
    }
    const std::size_t lo = (remaining + parts - 1) / parts;
    const std::size_t hi = std::min(max_part, remaining - (parts - 1));
    for (std::size_t first = lo; first <= hi; ++first) {
        prefix.push_back(first);
        partitions_into(remaining - first, parts - 1, first, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<PartSizes> multipartite_family(std::size_t n_max, std::size_t r_max) {
    std::vector<PartSizes> out;
    std::vector<std::size_t> prefix;
    for (std::size_t n = 2; n <= n_max; ++n) {
        for (std::size_t r = 2; r <= std::min(r_max, n); ++r) partitions_into(n, r, n, prefix, out);
    }
    return out;
}

SweepResult sweep_multipartite(std::size_t n_max, std::size_t r_max, std::size_t threads, const BnTolerances& tol) {
    if (n_max > Graph::kMaxVertices) throw std::invalid_argument("n_max exceeds the vertex limit");
    const auto family = multipartite_family(n_max, r_max);
    SweepResult result;
    result.reports.resize(family.size());
    parallel_for(family.size(), threads,
                 [&](std::size_t i) { result.reports[i] = bn_report_multipartite(family[i], tol); });
    result.summary.family = "multipartite";
    for (const auto& r : result.reports) result.summary.add(r);
    return result;
}

// ---------------------------------------------------------------------------

namespace {

ExhaustiveResult evaluate_all(std::vector<std::pair<std::string, Graph>>& graphs, std::size_t threads,
                              const BnTolerances& tol, std::string family) {
    std::vector<std::optional<BnReport>> slots(graphs.size());
    parallel_for(graphs.size(), threads, [&](std::size_t i) {
        auto& [source, g] = graphs[i];
        if (g.edge_count() == 0) return;
        slots[i] = bn_report(g, source, tol);
    });
    ExhaustiveResult result;
    result.graphs = graphs.size();
    result.summary.family = std::move(family);
    for (auto& slot : slots) {
        if (!slot) {
            ++result.summary.out_of_domain;
            continue;
        }
        result.summary.add(*slot);
        if (slot->violation()) result.violations.push_back(*slot);
        result.reports.push_back(std::move(*slot));
    }
    return result;
}

}  // namespace

ExhaustiveResult exhaustive_check(std::size_t n, std::size_t threads, const BnTolerances& tol) {
    if (n < 1 || n > kMaxBuiltinOrder) {
        throw std::invalid_argument("built-in enumeration supports 1 <= n <= " + std::to_string(kMaxBuiltinOrder));
    }
    const std::size_t pairs = n * (n - 1) / 2;
    std::vector<Edge> slots;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);

    std::vector<std::pair<std::string, Graph>> graphs;
    graphs.reserve(std::size_t{1} << pairs);
    for (std::size_t mask = 0; mask < (std::size_t{1} << pairs); ++mask) {
        Graph g(n);
        for (std::size_t b = 0; b < pairs; ++b) {
            if ((mask >> b) & 1) g.add_edge(slots[b].first, slots[b].second);
        }
        graphs.emplace_back("labeled:n=" + std::to_string(n) + ":mask=" + std::to_string(mask), std::move(g));
    }
    return evaluate_all(graphs, threads, tol, "labeled-n" + std::to_string(n));
}

ExhaustiveResult exhaustive_check(std::istream& graph6, std::size_t threads, const BnTolerances& tol) {
    std::vector<std::pair<std::string, Graph>> graphs;
    std::vector<MalformedLine> malformed;
    read_graph6_stream(
        graph6,
        [&](std::size_t line, Graph&& g) { graphs.emplace_back("graph6:line=" + std::to_string(line), std::move(g)); },
        [&](std::size_t line, const std::string& message) { malformed.push_back({line, message}); });
    ExhaustiveResult result = evaluate_all(graphs, threads, tol, "graph6");
    result.malformed = std::move(malformed);
    return result;
}

// ---------------------------------------------------------------------------

const char* to_string(K4FreeMethod method) noexcept {
    switch (method) {
        case K4FreeMethod::tripartite_subgraph: return "tripartite_subgraph";
        case K4FreeMethod::greedy_insertion: return "greedy_insertion";
    }
    return "unknown";
}

K4FreeMethod parse_k4_free_method(const std::string& name) {
    if (name == "tripartite_subgraph" || name == "tripartite") return K4FreeMethod::tripartite_subgraph;
    if (name == "greedy_insertion" || name == "greedy") return K4FreeMethod::greedy_insertion;
    throw std::invalid_argument("unknown K4-free generation method '" + name + "'");
}

namespace {

// Adding uv creates a K4 iff the common neighbourhood of u and v holds an edge.
bool closes_k4(const Graph& g, Vertex u, Vertex v) {
    const auto ru = g.row(u);
    const auto rv = g.row(v);
    std::vector<std::uint64_t> common(ru.size());
    for (std::size_t w = 0; w < ru.size(); ++w) common[w] = ru[w] & rv[w];
    bool found = false;
    for_each_bit(common, [&](Vertex x) {
        if (found) return;
        const auto rx = g.row(x);
        for (std::size_t w = 0; w < rx.size(); ++w) {
            if ((rx[w] & common[w]) != 0) {
                found = true;
                return;
            }
        }
    });
    return found;
}

double pair_count(std::size_t n) { return static_cast<double>(n) * static_cast<double>(n - 1) / 2.0; }

}  // namespace

GeneratedGraph random_k4_free(std::size_t n, double density, std::uint64_t seed, K4FreeMethod method,
                              bool balanced_parts) {
    if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in [0, 1]");
    Rng rng(seed);
    const double pairs = pair_count(n);
    const double target = density * pairs;
    Graph g(n);
    bool reached = true;

    if (method == K4FreeMethod::tripartite_subgraph) {
        std::vector<std::size_t> part(n);
        if (balanced_parts) {
            std::vector<Vertex> order(n);
            for (Vertex v = 0; v < n; ++v) order[v] = v;
            rng.shuffle(std::span<Vertex>(order));
            for (std::size_t i = 0; i < n; ++i) part[order[i]] = i % 3;
        } else {
            for (auto& p : part) p = static_cast<std::size_t>(rng.below(3));
        }
        double cross = 0.0;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) cross += part[u] != part[v] ? 1.0 : 0.0;
        reached = target <= cross;
        const double keep = cross == 0.0 ? 0.0 : std::min(1.0, target / cross);
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (part[u] != part[v] && rng.uniform() < keep) g.add_edge(u, v);
            }
        }
    } else {
        std::vector<Edge> order;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) order.emplace_back(u, v);
        rng.shuffle(std::span<Edge>(order));
        const auto target_m = static_cast<std::size_t>(std::llround(target));
        for (const auto& [u, v] : order) {
            if (g.edge_count() >= target_m) break;
            if (!closes_k4(g, u, v)) g.add_edge(u, v);
        }
        reached = g.edge_count() >= target_m;
    }
    const double achieved = n < 2 ? 0.0 : static_cast<double>(g.edge_count()) / pairs;
    return GeneratedGraph{std::move(g), reached, achieved};
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    Rng rng(seed);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.uniform() < p) g.add_edge(u, v);
    return g;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Edge> ordered_non_adjacent_pairs(const Graph& g) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (u != v && !g.adjacent(u, v)) pairs.emplace_back(u, v);
    return pairs;
}

TrajectoryPoint measure(const Graph& g, Vertex u, Vertex v) {
    return TrajectoryPoint{u, v, eigenvalues(g).largest(), clique_number(g), g.edge_count()};
}

}  // namespace

ZykovTrajectory zykov_trajectory(const Graph& g, std::size_t steps, std::uint64_t seed, ZykovOrientation orientation,
                                 double tol) {
    ZykovTrajectory t;
    t.initial = measure(g, 0, 0);
    if (ordered_non_adjacent_pairs(g).empty()) return t;

    Rng rng(seed);
    Graph current = g;
    TrajectoryPoint previous = t.initial;
    for (std::size_t step = 1; step <= steps; ++step) {
        const auto pairs = ordered_non_adjacent_pairs(current);
        auto [u, v] = pairs[static_cast<std::size_t>(rng.below(pairs.size()))];
        Graph next = zykov(current, u, v);
        if (orientation == ZykovOrientation::best_of_pair) {
            Graph reverse = zykov(current, v, u);
            if (eigenvalues(reverse).largest() > eigenvalues(next).largest()) {
                next = std::move(reverse);
                std::swap(u, v);
            }
        }
        current = std::move(next);
        const TrajectoryPoint point = measure(current, u, v);
        const double drop = previous.lambda1 - point.lambda1;
        if (drop > tol) t.lambda1_decreases.push_back(step);
        t.worst_lambda1_drop = std::max(t.worst_lambda1_drop, drop);
        if (point.omega > previous.omega) t.omega_increases.push_back(step);
        t.steps.push_back(point);
        previous = point;
    }
    return t;
}

// ---------------------------------------------------------------------------

void SearchConfig::validate() const {
    if (n < 2 || n > Graph::kMaxVertices) throw std::invalid_argument("search needs 2 <= n <= vertex limit");
    if (restarts == 0) throw std::invalid_argument("search needs at least one restart");
    if (weights.edge_add < 0 || weights.edge_delete < 0 || weights.zykov < 0) {
        throw std::invalid_argument("move weights must be non-negative");
    }
    if (weights.edge_add + weights.edge_delete + weights.zykov <= 0) {
        throw std::invalid_argument("at least one move weight must be positive");
    }
    if (!(initial_density >= 0.0 && initial_density <= 1.0)) {
        throw std::invalid_argument("initial density must lie in [0, 1]");
    }
}

double search_objective(const Graph& g, SearchObjective objective, bool k4_constrained) {
    constexpr double worst = -std::numeric_limits<double>::infinity();
    if (g.edge_count() == 0 || g.is_complete()) return worst;
    if (k4_constrained && !is_k4_free(g)) return worst;
    if (objective == SearchObjective::lambda1) return eigenvalues(g).largest();
    return -bn_report(g).gap;
}

namespace {

constexpr double kObjectiveTie = 1e-12;

bool same_value(double a, double b) { return a == b || std::abs(a - b) <= kObjectiveTie; }

// True if (value, g) should replace (best_value, best).
bool better(double value, const Graph& g, double best_value, const Graph& best) {
    if (same_value(value, best_value)) return g.upper_triangle() < best.upper_triangle();
    return value > best_value;
}

struct RestartOutcome {
    Graph best;
    double objective;
    std::size_t iterations = 0;
    std::size_t evaluations = 0;
    std::size_t accepted = 0;
    std::size_t sideways = 0;
};

std::optional<Graph> propose(const Graph& g, const MoveWeights& w, Rng& rng) {
    const double total = w.edge_add + w.edge_delete + w.zykov;
    const double pick = rng.uniform() * total;
    Graph out = g;
    if (pick < w.edge_add) {
        std::vector<Edge> non_edges;
        for (Vertex u = 0; u < g.vertex_count(); ++u)
            for (Vertex v = u + 1; v < g.vertex_count(); ++v)
                if (!g.adjacent(u, v)) non_edges.emplace_back(u, v);
        if (non_edges.empty()) return std::nullopt;
        const auto [u, v] = non_edges[static_cast<std::size_t>(rng.below(non_edges.size()))];
        out.add_edge(u, v);
    } else if (pick < w.edge_add + w.edge_delete) {
        const auto edges = g.edges();
        if (edges.empty()) return std::nullopt;
        const auto [u, v] = edges[static_cast<std::size_t>(rng.below(edges.size()))];
        out.remove_edge(u, v);
    } else {
        const auto pairs = ordered_non_adjacent_pairs(g);
        if (pairs.empty()) return std::nullopt;
        const auto [u, v] = pairs[static_cast<std::size_t>(rng.below(pairs.size()))];
        out = zykov(g, u, v);
    }
    return out;
}

RestartOutcome climb(const SearchConfig& cfg, std::size_t restart) {
    Rng rng(derive_seed(cfg.seed, restart));
    const std::uint64_t init_seed = rng.next();
    Graph current = cfg.k4_constrained
                        ? random_k4_free(cfg.n, cfg.initial_density, init_seed, K4FreeMethod::greedy_insertion).graph
                        : random_graph(cfg.n, cfg.initial_density, init_seed);
    double value = search_objective(current, cfg.objective, cfg.k4_constrained);
    RestartOutcome out{current, value};
    out.evaluations = 1;

    const std::size_t sideways_limit = cfg.n * cfg.n;
    std::size_t sideways_run = 0;
    for (std::size_t it = 0; it < cfg.max_iters; ++it) {
        ++out.iterations;
        auto candidate = propose(current, cfg.weights, rng);
        if (!candidate) continue;
        if (cfg.k4_constrained && !is_k4_free(*candidate)) continue;
        const double cand_value = search_objective(*candidate, cfg.objective, cfg.k4_constrained);
        ++out.evaluations;
        if (same_value(cand_value, value)) {
            if (sideways_run >= sideways_limit) break;
            ++sideways_run;
            ++out.sideways;
        } else if (cand_value > value) {
            sideways_run = 0;
        } else {
            continue;
        }
        ++out.accepted;
        current = std::move(*candidate);
        value = cand_value;
        if (better(value, current, out.objective, out.best)) {
            out.best = current;
            out.objective = value;
        }
    }
    return out;
}

}  // namespace

HillClimbResult hill_climb(const SearchConfig& cfg) {
    cfg.validate();
    std::vector<std::optional<RestartOutcome>> outcomes(cfg.restarts);
    parallel_for(cfg.restarts, cfg.threads, [&](std::size_t i) { outcomes[i] = climb(cfg, i); });

    std::size_t best = 0;
    for (std::size_t i = 1; i < outcomes.size(); ++i) {
        if (better(outcomes[i]->objective, outcomes[i]->best, outcomes[best]->objective, outcomes[best]->best)) {
            best = i;
        }
    }
    HillClimbResult result{outcomes[best]->best, {}, outcomes[best]->objective, best};
    result.report = bn_report(result.best, "search:seed=" + std::to_string(cfg.seed) + ":restart=" + std::to_string(best));
    result.restarts_run = cfg.restarts;
    for (const auto& o : outcomes) {
        result.iterations += o->iterations;
        result.evaluations += o->evaluations;
        result.accepted += o->accepted;
        result.sideways += o->sideways;
    }
    return result;
}

}  // namespace bnkit
