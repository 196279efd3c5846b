#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "bnkit/conjecture.hpp"
#include "bnkit/error.hpp"
#include "bnkit/graph_io.hpp"
#include "bnkit/multipartite.hpp"
#include "bnkit/report_io.hpp"
#include "bnkit/search.hpp"
#include "bnkit/spectral.hpp"
#include "bnkit/stability.hpp"

#ifndef BNKIT_VERSION
#define BNKIT_VERSION "unknown"
#endif

namespace bnkit::cli {
namespace {

struct Options {
    std::string parts;
    std::string graph6;
    std::string edges;
    std::string out;
    std::string method;
    std::string grid = "0,1,2,3,4,5,6,7,8,9,10";
    std::string objective = "gap";
    std::size_t n_max = 0;
    std::size_t r_max = 6;
    std::size_t threads = 0;
    std::optional<std::size_t> n;
    std::optional<std::size_t> restarts;
    std::size_t steps = 20;
    std::size_t samples = 50;
    std::size_t max_iters = 1000;
    std::uint64_t seed = 0;
    std::optional<double> density;
    double delta = 0.05;
    double c = 0.25;
    bool k4_free = false;
};

std::string iso_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string sha256_hex(std::string_view data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(kHex[md[i] >> 4]);
        out.push_back(kHex[md[i] & 15]);
    }
    return out;
}

/// Per-run state shared by the subcommands: input digests for the manifest
/// and the diagnostic stream.
struct Run {
    std::istream& in;
    std::ostream& err;
    std::vector<std::pair<std::string, std::string>> digests;  // (label, sha256)
    std::vector<std::uint64_t> seeds;
    std::string stdin_cache;
    bool stdin_read = false;

    std::string read_source(const std::string& path) {
        if (path == "-") {
            if (!stdin_read) {
                stdin_cache.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
                stdin_read = true;
                digests.emplace_back("stdin", sha256_hex(stdin_cache));
            }
            return stdin_cache;
        }
        std::ifstream file(path, std::ios::binary);
        if (!file) throw InputError("cannot read '" + path + "'");
        std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
        digests.emplace_back(path, sha256_hex(text));
        return text;
    }
};

struct NamedGraph {
    std::string source;
    Graph graph;
};

struct GraphBatch {
    std::vector<NamedGraph> graphs;
    std::size_t malformed = 0;
};

std::size_t source_count(const Options& o) {
    return static_cast<std::size_t>(!o.parts.empty()) + !o.graph6.empty() + !o.edges.empty() + o.n.has_value();
}

Graph random_input(const Options& o, const std::string& generator) {
    const double density = o.density.value_or(0.5);
    if (generator == "gnp") return random_graph(*o.n, density, o.seed);
    return random_k4_free(*o.n, density, o.seed, parse_k4_free_method(generator)).graph;
}

/// Loads the graphs named by --parts, --graph6, --edges, or a random draw
/// (--n with --density and --seed). Malformed graph6 lines are reported to
/// stderr with their line numbers and skipped.
GraphBatch load_graphs(const Options& o, Run& run, const std::string& generator) {
    if (source_count(o) != 1) {
        throw CLI::ValidationError("give exactly one of --parts, --graph6, --edges or --n");
    }
    GraphBatch batch;
    if (!o.parts.empty()) {
        const PartSizes parts = PartSizes::parse(o.parts);
        batch.graphs.push_back({"multipartite:" + parts.to_string(), complete_multipartite(parts)});
    } else if (!o.edges.empty()) {
        batch.graphs.push_back({"edges:" + o.edges, parse_edge_list(run.read_source(o.edges))});
    } else if (o.n) {
        run.seeds.push_back(o.seed);
        std::ostringstream s;
        s << "random:" << generator << ":n=" << *o.n << ":density=" << o.density.value_or(0.5)
          << ":seed=" << o.seed;
        batch.graphs.push_back({s.str(), random_input(o, generator)});
    } else if (o.graph6 != "-" && !std::filesystem::is_regular_file(o.graph6)) {
        // A literal record on the command line.
        batch.graphs.push_back({"graph6:" + o.graph6, parse_graph6(o.graph6)});
    } else {
        std::istringstream text(run.read_source(o.graph6));
        read_graph6_stream(
            text,
            [&](std::size_t line, Graph&& g) {
                batch.graphs.push_back({"graph6:line=" + std::to_string(line), std::move(g)});
            },
            [&](std::size_t line, const std::string& message) {
                ++batch.malformed;
                run.err << "error: line " << line << ": " << message << '\n';
            });
    }
    return batch;
}

std::string report_json(BnReport r) {
    if (r.status == BnStatus::out_of_domain) r.source += ";out_of_domain";
    return to_json(r);
}

void summary_line(std::ostream& err, const std::string& subcommand, const RunSummary& s) {
    err << "summary: " << subcommand << " family=" << s.family << " reports=" << s.reports << " holds=" << s.holds
        << " equality=" << s.equality << " excluded=" << s.excluded << " out_of_domain=" << s.out_of_domain
        << " violations=" << s.violations << " min_gap=" << format_double(s.min_gap)
        << " argmin=" << (s.argmin_source.empty() ? "-" : s.argmin_source) << '\n';
}

void flag_violations(std::ostream& err, const std::vector<BnReport>& reports) {
    for (const auto& r : reports) {
        if (r.violation()) err << "VIOLATION: " << r.source << " gap=" << format_double(r.gap) << '\n';
    }
}

int verdict(std::size_t violations, std::size_t malformed) {
    if (violations > 0) return kExitViolation;
    return malformed > 0 ? kExitUsage : kExitOk;
}

// ---------------------------------------------------------------------------
// Subcommands. Each writes its primary output to `out` and returns the exit code.

int cmd_spectrum(const Options& o, Run& run, std::ostream& out) {
    if (!o.parts.empty() && source_count(o) == 1) {
        const PartSizes parts = PartSizes::parse(o.parts);
        const SecularSpectrum s = multipartite_spectrum(parts);
        std::vector<std::size_t> pole_multiplicities;
        std::vector<double> pole_values;
        for (const auto& p : s.pole_eigenvalues) {
            pole_values.push_back(p.value);
            pole_multiplicities.push_back(p.multiplicity);
        }
        out << JsonObject{}
                   .field("source", "multipartite:" + parts.to_string())
                   .field("method", "secular")
                   .field("n", parts.vertex_count())
                   .field("m", parts.edge_count())
                   .field("eigenvalues", s.flatten())
                   .field("secular_roots", s.secular_roots)
                   .field("pole_values", pole_values)
                   .field("pole_multiplicities", pole_multiplicities)
                   .field("zero_multiplicity", s.zero_multiplicity)
                   .str()
            << '\n';
        return kExitOk;
    }
    const GraphBatch batch = load_graphs(o, run, o.method.empty() ? "gnp" : o.method);
    for (const auto& [source, g] : batch.graphs) {
        const Spectrum s = eigenvalues(g);
        const TraceReport t = trace_check(s);
        out << JsonObject{}
                   .field("source", source)
                   .field("method", "dense")
                   .field("n", g.vertex_count())
                   .field("m", g.edge_count())
                   .field("eigenvalues", s.values)
                   .field("trace_sum_residual", t.sum_residual)
                   .field("trace_square_residual", t.square_residual)
                   .field("trace_pass", t.pass)
                   .str()
            << '\n';
    }
    return batch.malformed > 0 ? kExitUsage : kExitOk;
}

int cmd_report(const Options& o, Run& run, std::ostream& out) {
    RunSummary summary;
    std::vector<BnReport> reports;
    std::size_t malformed = 0;
    if (!o.parts.empty() && source_count(o) == 1) {
        reports.push_back(bn_report_multipartite(PartSizes::parse(o.parts)));
        summary.family = "multipartite";
    } else {
        const GraphBatch batch = load_graphs(o, run, o.method.empty() ? "gnp" : o.method);
        malformed = batch.malformed;
        for (const auto& [source, g] : batch.graphs) reports.push_back(bn_report(g, source));
        summary.family = !o.graph6.empty() ? "graph6" : (!o.edges.empty() ? "edges" : "random");
    }
    for (const auto& r : reports) {
        summary.add(r);
        out << report_json(r) << '\n';
    }
    flag_violations(run.err, reports);
    summary_line(run.err, "report", summary);
    return verdict(summary.violations, malformed);
}

void write_summary_file(const Options& o, const std::vector<RunSummary>& summaries) {
    if (o.out.empty()) return;
    std::ofstream csv(o.out + ".summary.csv");
    if (!csv) throw InputError("cannot write '" + o.out + ".summary.csv'");
    write_summary_csv(csv, summaries);
}

int cmd_sweep(const Options& o, Run& run, std::ostream& out) {
    const std::size_t n_max = o.n_max == 0 ? 30 : o.n_max;
    SweepResult sweep = sweep_multipartite(n_max, o.r_max, o.threads);
    sweep.summary.family = "multipartite:n<=" + std::to_string(n_max) + ":r<=" + std::to_string(o.r_max);
    for (const auto& r : sweep.reports) out << report_json(r) << '\n';
    flag_violations(run.err, sweep.reports);
    summary_line(run.err, "sweep", sweep.summary);
    write_summary_file(o, {sweep.summary});
    return verdict(sweep.summary.violations, 0);
}

int cmd_exhaustive(const Options& o, Run& run, std::ostream& out) {
    if ((o.n_max == 0) == o.graph6.empty()) {
        throw CLI::ValidationError("exhaustive needs exactly one of --n-max (built-in) or --graph6 (corpus)");
    }
    std::vector<RunSummary> summaries;
    std::size_t violations = 0;
    std::size_t malformed = 0;
    const auto emit = [&](ExhaustiveResult& r, const std::string& family) {
        r.summary.family = family;
        for (const auto& rep : r.reports) out << report_json(rep) << '\n';
        for (const auto& bad : r.malformed) run.err << "error: line " << bad.line << ": " << bad.message << '\n';
        flag_violations(run.err, r.violations);
        summary_line(run.err, "exhaustive", r.summary);
        violations += r.violations.size();
        malformed += r.malformed.size();
        summaries.push_back(r.summary);
    };
    if (o.n_max != 0) {
        for (std::size_t n = 1; n <= o.n_max; ++n) {
            ExhaustiveResult r = exhaustive_check(n, o.threads);
            emit(r, "labeled:n=" + std::to_string(n));
        }
    } else {
        std::istringstream text(run.read_source(o.graph6));
        ExhaustiveResult r = exhaustive_check(text, o.threads);
        emit(r, "graph6:" + o.graph6);
    }
    write_summary_file(o, summaries);
    return verdict(violations, malformed);
}

int cmd_search(const Options& o, Run& run, std::ostream& out) {
    SearchConfig cfg;
    cfg.seed = o.seed;
    cfg.n = o.n.value_or(6);
    cfg.max_iters = o.max_iters;
    cfg.restarts = o.restarts.value_or(10);
    cfg.k4_constrained = o.k4_free;
    cfg.initial_density = o.density.value_or(0.5);
    cfg.threads = o.threads;
    if (o.objective == "gap") {
        cfg.objective = SearchObjective::bn_gap_negated;
    } else if (o.objective == "lambda1") {
        cfg.objective = SearchObjective::lambda1;
    } else {
        throw CLI::ValidationError("--objective must be gap or lambda1");
    }
    cfg.validate();
    run.seeds.push_back(o.seed);
    const HillClimbResult r = hill_climb(cfg);
    out << JsonObject{}
               .field("n", cfg.n)
               .field("seed", std::to_string(cfg.seed))
               .field("restarts", cfg.restarts)
               .field("max_iters", cfg.max_iters)
               .field("k4_constrained", cfg.k4_constrained)
               .field("objective", o.objective)
               .field("objective_value", r.objective)
               .field("best_graph6", to_graph6(r.best))
               .field("best_restart", r.best_restart)
               .field("iterations", r.iterations)
               .field("evaluations", r.evaluations)
               .field("accepted", r.accepted)
               .field("sideways", r.sideways)
               .raw("report", report_json(r.report))
               .str()
        << '\n';
    RunSummary summary;
    summary.family = "search";
    summary.add(r.report);
    flag_violations(run.err, {r.report});
    summary_line(run.err, "search", summary);
    return verdict(summary.violations, 0);
}

int cmd_zykov(const Options& o, Run& run, std::ostream& out) {
    ZykovOrientation orientation = ZykovOrientation::as_drawn;
    if (o.method == "best_of_pair") {
        orientation = ZykovOrientation::best_of_pair;
    } else if (!o.method.empty() && o.method != "as_drawn") {
        throw CLI::ValidationError("--method must be as_drawn or best_of_pair for zykov");
    }
    const GraphBatch batch = load_graphs(o, run, o.k4_free ? "greedy_insertion" : "gnp");
    run.seeds.push_back(o.seed);
    std::size_t findings = 0;
    for (const auto& [source, g] : batch.graphs) {
        const ZykovTrajectory t = zykov_trajectory(g, o.steps, o.seed, orientation);
        const auto point = [](const TrajectoryPoint& p, std::size_t step) {
            return JsonObject{}
                .field("step", step)
                .field("u", p.u)
                .field("v", p.v)
                .field("lambda1", p.lambda1)
                .field("omega", p.omega)
                .field("m", p.m)
                .str();
        };
        std::string steps = "[" + point(t.initial, 0);
        for (std::size_t i = 0; i < t.steps.size(); ++i) steps += "," + point(t.steps[i], i + 1);
        steps += "]";
        out << JsonObject{}
                   .field("source", source)
                   .field("seed", std::to_string(o.seed))
                   .field("orientation", orientation == ZykovOrientation::as_drawn ? "as_drawn" : "best_of_pair")
                   .field("lambda1_monotone", t.lambda1_monotone())
                   .field("omega_monotone", t.omega_monotone())
                   .field("lambda1_decreases", t.lambda1_decreases)
                   .field("omega_increases", t.omega_increases)
                   .field("worst_lambda1_drop", t.worst_lambda1_drop)
                   .raw("trajectory", steps)
                   .str()
            << '\n';
        if (!t.lambda1_monotone() || !t.omega_monotone()) {
            ++findings;
            run.err << "FINDING: " << source << " lambda1 decreased at " << t.lambda1_decreases.size()
                    << " steps (worst drop " << format_double(t.worst_lambda1_drop) << "), omega increased at "
                    << t.omega_increases.size() << " steps\n";
        }
    }
    run.err << "summary: zykov trajectories=" << batch.graphs.size() << " findings=" << findings << '\n';
    return verdict(findings, batch.malformed);
}

std::vector<std::size_t> parse_grid(const std::string& text) {
    std::vector<std::size_t> grid;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t pos = 0;
        unsigned long long value = 0;
        try {
            value = std::stoull(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (item.empty() || pos != item.size() || !std::isdigit(static_cast<unsigned char>(item.front()))) {
            throw InputError("bad --grid entry '" + item + "'");
        }
        grid.push_back(static_cast<std::size_t>(value));
    }
    if (grid.empty()) throw InputError("--grid is empty");
    return grid;
}

int cmd_stability(const Options& o, Run& run, std::ostream& out) {
    const std::size_t n = o.n.value_or(12);
    StabilityOptions opts;
    opts.threads = o.threads;
    opts.local_restarts = o.restarts.value_or(20);
    if (o.method == "local_search") {
        opts.force_local = true;
    } else if (o.method == "exact") {
        if (n > kMaxExactEditOrder) throw CLI::ValidationError("--method exact supports --n <= 12");
    } else if (!o.method.empty() && o.method != "auto") {
        throw CLI::ValidationError("--method must be auto, exact or local_search for stability");
    }
    run.seeds.push_back(o.seed);
    const auto rows = stability_experiment(n, parse_grid(o.grid), o.samples, o.seed, opts);
    write_stability_csv(out, rows);
    std::size_t over = 0;
    for (const auto& r : rows) over += r.edits > r.k ? 1 : 0;
    run.err << "summary: stability n=" << n << " rows=" << rows.size() << " rows_above_k=" << over << '\n';
    return kExitOk;
}

int cmd_dense_check(const Options& o, Run& run, std::ostream& out) {
    const GraphBatch batch = load_graphs(o, run, o.method.empty() ? "greedy_insertion" : o.method);
    std::size_t fails = 0;
    std::size_t applicable = 0;
    for (const auto& [source, g] : batch.graphs) {
        DenseCaseReport d = dense_case_check(g, o.c, o.delta);
        d.bn.source = source;
        out << JsonObject{}
                   .field("source", source)
                   .field("status", to_string(d.status))
                   .field("reason", d.reason)
                   .field("c", d.c)
                   .field("delta", d.delta)
                   .field("n", d.n)
                   .field("m", d.m)
                   .field("lambda1_sq", d.lambda1_sq)
                   .field("regime", d.regime)
                   .field("triangles", d.triangles)
                   .field("triangle_bound", d.triangle_bound)
                   .field("triangle_bound_holds", d.triangle_bound_holds)
                   .field("lambda2_cubed", d.lambda2_cubed)
                   .field("lambda2_cubed_bound", d.lambda2_cubed_bound)
                   .field("lambda2_bound_holds", d.lambda2_bound_holds)
                   .raw("report", d.status == CheckStatus::not_applicable ? "null" : report_json(d.bn))
                   .str()
            << '\n';
        if (d.status == CheckStatus::not_applicable) continue;
        ++applicable;
        if (d.status == CheckStatus::fail) {
            ++fails;
            run.err << "VIOLATION: " << source << " gap=" << format_double(d.bn.gap) << '\n';
        }
        if (d.regime == 2 && !(d.triangle_bound_holds && d.lambda2_bound_holds)) {
            run.err << "note: " << source << " case-2 diagnostic bound not met (observational)\n";
        }
    }
    run.err << "summary: dense-check graphs=" << batch.graphs.size() << " applicable=" << applicable
            << " violations=" << fails << '\n';
    return verdict(fails, batch.malformed);
}

// ---------------------------------------------------------------------------

std::string options_json(const Options& o) {
    JsonObject j;
    j.field("parts", o.parts)
        .field("graph6", o.graph6)
        .field("edges", o.edges)
        .field("out", o.out)
        .field("method", o.method)
        .field("grid", o.grid)
        .field("objective", o.objective)
        .field("n_max", o.n_max)
        .field("r_max", o.r_max)
        .field("threads", o.threads)
        .field("steps", o.steps)
        .field("samples", o.samples)
        .field("max_iters", o.max_iters)
        .field("seed", std::to_string(o.seed))
        .field("delta", o.delta)
        .field("c", o.c)
        .field("k4_free", o.k4_free);
    if (o.n) j.field("n", *o.n);
    if (o.restarts) j.field("restarts", *o.restarts);
    if (o.density) j.field("density", *o.density);
    return j.str();
}

void write_manifest(const Options& o, const std::string& subcommand, const std::vector<std::string>& args,
                    const Run& run, const std::string& started, int exit_code) {
    std::string argv = "[";
    for (std::size_t i = 0; i < args.size(); ++i) argv += (i ? "," : "") + json_escape(args[i]);
    argv += "]";
    std::string inputs = "[";
    for (std::size_t i = 0; i < run.digests.size(); ++i) {
        inputs += (i ? "," : "") + JsonObject{}
                                       .field("input", run.digests[i].first)
                                       .field("sha256", run.digests[i].second)
                                       .str();
    }
    inputs += "]";
    std::string seeds = "[";
    for (std::size_t i = 0; i < run.seeds.size(); ++i) seeds += (i ? "," : "") + json_escape(std::to_string(run.seeds[i]));
    seeds += "]";
    std::ofstream manifest(o.out + ".manifest.json");
    if (!manifest) throw InputError("cannot write '" + o.out + ".manifest.json'");
    manifest << JsonObject{}
                    .field("tool", "bnkit")
                    .field("version", BNKIT_VERSION)
                    .field("subcommand", subcommand)
                    .raw("argv", argv)
                    .raw("flags", options_json(o))
                    .raw("seeds", seeds)
                    .raw("inputs", inputs)
                    .field("output", o.out)
                    .field("exit_code", exit_code)
                    .field("started", started)
                    .field("finished", iso_now())
                    .str()
             << '\n';
}

void add_graph_source(CLI::App* cmd, Options& o) {
    cmd->add_option("--parts", o.parts, "complete multipartite part sizes, e.g. 2,2,2");
    cmd->add_option("--graph6", o.graph6, "graph6 file, '-' for standard input, or a literal record");
    cmd->add_option("--edges", o.edges, "edge-list file ('n m' then m lines 'u v'), '-' for standard input");
    cmd->add_option("--n", o.n, "order of a random input graph");
    cmd->add_option("--density", o.density, "edge density m / C(n,2) of a random input graph")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--seed", o.seed, "random seed");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"bnkit: spectral checks of lambda1^2 + lambda2^2 <= 2(1 - 1/omega) m"};
    app.set_version_flag("--version", BNKIT_VERSION);
    app.require_subcommand(1, 1);

    auto* spectrum = app.add_subcommand("spectrum", "adjacency spectrum (exact secular path with --parts)");
    add_graph_source(spectrum, o);
    spectrum->add_option("--method", o.method, "random generator: gnp, tripartite_subgraph, greedy_insertion");

    auto* report = app.add_subcommand("report", "inequality report per graph, one JSON object per line");
    add_graph_source(report, o);
    report->add_option("--method", o.method, "random generator: gnp, tripartite_subgraph, greedy_insertion");

    auto* sweep = app.add_subcommand("sweep", "every complete multipartite graph up to --n-max, --r-max parts");
    sweep->add_option("--n-max", o.n_max, "largest order (default 30)");
    sweep->add_option("--r-max", o.r_max, "largest part count (default 6)");

    auto* exhaustive = app.add_subcommand("exhaustive", "all labeled graphs up to --n-max, or a graph6 corpus");
    exhaustive->add_option("--n-max", o.n_max, "largest built-in order (at most 6)");
    exhaustive->add_option("--graph6", o.graph6, "graph6 corpus file or '-' for standard input");

    auto* search = app.add_subcommand("search", "restarted hill climbing for counterexamples");
    search->add_option("--n", o.n, "order (default 6)");
    search->add_option("--seed", o.seed, "random seed");
    search->add_option("--restarts", o.restarts, "restarts (default 10)");
    search->add_option("--max-iters", o.max_iters, "move proposals per restart (default 1000)");
    search->add_option("--density", o.density, "initial edge density (default 0.5)")->check(CLI::Range(0.0, 1.0));
    search->add_flag("--k4-free", o.k4_free, "restrict the search to K4-free graphs");
    search->add_option("--objective", o.objective, "gap (default) or lambda1");

    auto* zykov = app.add_subcommand("zykov", "seeded Zykov symmetrization trajectory");
    add_graph_source(zykov, o);
    zykov->add_option("--steps", o.steps, "operations per trajectory (default 20)");
    zykov->add_option("--method", o.method, "pair orientation: as_drawn (default) or best_of_pair");
    zykov->add_flag("--k4-free", o.k4_free, "draw the random input K4-free");

    auto* stability = app.add_subcommand("stability", "edit distance of edge-deleted T(n,3), CSV output");
    stability->add_option("--n", o.n, "order (default 12)");
    stability->add_option("--grid", o.grid, "deletion counts, e.g. 0,1,2,5");
    stability->add_option("--samples", o.samples, "samples per grid point (default 50)");
    stability->add_option("--seed", o.seed, "random seed");
    stability->add_option("--method", o.method, "auto (default), exact or local_search");
    stability->add_option("--restarts", o.restarts, "local search restarts (default 20)");

    auto* dense = app.add_subcommand("dense-check", "dense K4-free case check with diagnostics");
    add_graph_source(dense, o);
    dense->add_option("--method", o.method, "random generator: greedy_insertion (default), tripartite_subgraph, gnp");
    dense->add_option("--c", o.c, "edge constant: requires m >= c n^2 (default 0.25)");
    dense->add_option("--delta", o.delta, "case split: lambda1^2 > (4/3 - delta) m (default 0.05)");

    for (auto* cmd : {sweep, exhaustive, search, stability}) {
        cmd->add_option("--threads", o.threads, "worker threads, 0 = all cores (default)");
    }
    for (auto* cmd : {spectrum, report, sweep, exhaustive, search, zykov, stability, dense}) {
        cmd->add_option("--out", o.out, "write output to this file plus a sibling .manifest.json");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const std::string subcommand = app.get_subcommands().front()->get_name();
    const std::string started = iso_now();
    Run run{in, err, {}, {}, {}, false};
    try {
        std::ofstream file;
        if (!o.out.empty()) {
            file.open(o.out);
            if (!file) throw InputError("cannot write '" + o.out + "'");
        }
        std::ostream& sink = o.out.empty() ? out : file;
        int code = kExitOk;
        if (subcommand == "spectrum") code = cmd_spectrum(o, run, sink);
        else if (subcommand == "report") code = cmd_report(o, run, sink);
        else if (subcommand == "sweep") code = cmd_sweep(o, run, sink);
        else if (subcommand == "exhaustive") code = cmd_exhaustive(o, run, sink);
        else if (subcommand == "search") code = cmd_search(o, run, sink);
        else if (subcommand == "zykov") code = cmd_zykov(o, run, sink);
        else if (subcommand == "stability") code = cmd_stability(o, run, sink);
        else code = cmd_dense_check(o, run, sink);
        sink.flush();
        if (!o.out.empty()) write_manifest(o, subcommand, args, run, started, code);
        return code;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitUsage;
}

}  // namespace bnkit::cli
