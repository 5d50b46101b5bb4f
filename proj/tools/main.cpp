// Command-line front end: generate graphs, run the dominating-set
// algorithms, compute lower bounds, and reproduce the benchmark tables.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mds/exact.hpp"
#include "mds/harness.hpp"

namespace {

using namespace mds;

Graph load_input(const std::string& path, const std::string& format, IngestStats* stats = nullptr) {
    if (path == "-") return read_graph(std::cin, parse_format(format), stats);
    return read_graph_file(path, parse_format(format), stats);
}

void emit_report(const ExperimentReport& report, const std::string& out_path, OutputFormat fmt) {
    std::ostringstream buffer;
    if (fmt == OutputFormat::Csv) report.write_csv(buffer);
    else report.write_markdown(buffer);
    if (out_path.empty() || out_path == "-") {
        std::cout << buffer.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw input_error("cannot open '" + out_path + "' for writing");
        out << buffer.str();
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Minimum dominating set toolkit: greedy, LP rounding and hybrid algorithms"};
    app.require_subcommand(1);

    // ----- generate -----
    auto* generate_cmd = app.add_subcommand("generate", "Generate a synthetic graph family");
    std::string family, gen_out = "-", gen_format = "edge-list";
    int gen_d = 0, gen_k = 0, gen_p = 0;
    std::size_t gen_n = 0;
    std::uint64_t gen_seed = 0;
    generate_cmd->add_option("family", family, "hypercube|queens|ktree|trap-stars|trap-clique")
        ->required();
    generate_cmd->add_option("--d", gen_d, "hypercube dimension");
    generate_cmd->add_option("--k", gen_k, "queens board side / k-tree parameter");
    generate_cmd->add_option("--n", gen_n, "k-tree vertex count");
    generate_cmd->add_option("--p", gen_p, "trap family scale");
    generate_cmd->add_option("--seed", gen_seed, "seed for randomized families");
    generate_cmd->add_option("-o,--out", gen_out, "output path (default stdout)");
    generate_cmd->add_option("--format", gen_format, "edge-list|metis");

    // ----- solve -----
    auto* solve_cmd = app.add_subcommand("solve", "Run one algorithm on a graph");
    std::string algo, input, in_format = "edge-list", tie = "min-id", variant = "a1";
    double alpha = 0.5;
    int arboricity_flag = 0;
    std::size_t max_n = 32;
    bool print_set = false;
    solve_cmd->add_option("--algo", algo, "greedy|a1|a2|a1p|a2p|a3|hybrid|exact|lp-only")
        ->required();
    solve_cmd->add_option("-i,--input", input, "graph file ('-' for stdin)")->required();
    solve_cmd->add_option("--format", in_format, "edge-list|metis|snap");
    solve_cmd->add_option("--tie", tie, "greedy tie policy: min-id|max-id");
    solve_cmd->add_option("--alpha", alpha, "hybrid greedy-prefix fraction in [0,1]");
    solve_cmd->add_option("--variant", variant, "hybrid rounding variant: a1|a2|a1p|a2p|a3");
    solve_cmd->add_option("--arboricity", arboricity_flag, "override the arboricity estimate");
    solve_cmd->add_option("--max-n", max_n, "exact oracle vertex cap");
    solve_cmd->add_flag("--print-set", print_set, "print the vertex set (original labels)");

    // ----- lowerbound -----
    auto* lb_cmd = app.add_subcommand("lowerbound", "Decomposition lower bound max{M*,N*}");
    std::string lb_input, lb_format = "edge-list";
    double prefix_fraction = 0.5;
    lb_cmd->add_option("-i,--input", lb_input, "graph file")->required();
    lb_cmd->add_option("--format", lb_format, "edge-list|metis|snap");
    lb_cmd->add_option("--prefix-fraction", prefix_fraction,
                       "greedy prefix fraction defining the separation, in (0,1)");

    // ----- bench -----
    auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite and emit a table");
    std::string suite, bench_out, emit = "csv", config_path;
    std::uint64_t bench_seed = 0;
    bench_cmd->add_option("--suite", suite, "hypercubes|queens|ktrees|traps");
    bench_cmd->add_option("--config", config_path, "key=value spec file");
    bench_cmd->add_option("--out", bench_out, "output path (default stdout)");
    bench_cmd->add_option("--emit", emit, "csv|markdown");
    bench_cmd->add_option("--seed", bench_seed, "seed for randomized families");

    // ----- validate -----
    auto* validate_cmd = app.add_subcommand("validate", "Check that a vertex set dominates a graph");
    std::string val_input, val_format = "edge-list", set_path;
    validate_cmd->add_option("-i,--input", val_input, "graph file")->required();
    validate_cmd->add_option("--format", val_format, "edge-list|metis|snap");
    validate_cmd->add_option("--set", set_path, "file of whitespace-separated vertex ids")
        ->required();

    CLI11_PARSE(app, argc, argv);

    if (*generate_cmd) {
        FamilyParams params;
        if (family == "hypercube") params = {FamilyParams::Family::Hypercube, gen_d};
        else if (family == "queens") params = {FamilyParams::Family::Queens, 0, gen_k};
        else if (family == "ktree")
            params = {FamilyParams::Family::KTree, 0, gen_k, gen_n, 0, gen_seed};
        else if (family == "trap-stars") params = {FamilyParams::Family::TrapStars, 0, 0, 0, gen_p};
        else if (family == "trap-clique")
            params = {FamilyParams::Family::TrapClique, 0, 0, 0, gen_p};
        else throw input_error("unknown family '" + family + "'");
        Graph g = generate(params);
        if (gen_out == "-") write_graph(g, std::cout, parse_format(gen_format));
        else write_graph_file(g, gen_out, parse_format(gen_format));
        std::cerr << params.name() << ": n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
        return 0;
    }

    if (*solve_cmd) {
        IngestStats stats;
        Graph g = load_input(input, in_format, &stats);
        GraphSource src{FileSource{input, parse_format(in_format)}, input};
        ArboricitySource arb;
        arb.kind = arboricity_flag > 0 ? ArboricitySource::Kind::UserValue
                                       : ArboricitySource::Kind::DensityLowerBound;
        arb.user_value = arboricity_flag;

        DominatingSetResult result;
        if (algo == "lp-only") {
            FractionalSolution sol = solve_lp(build_lp1(g));
            if (sol.status != SolveStatus::Optimal)
                throw input_error("LP1 solve failed: " + sol.diagnostic);
            std::cout << "L* = " << sol.objective << '\n';
            return 0;
        } else if (algo == "greedy") {
            result = greedy_dominating_set(g, parse_tie_policy(tie)).as_result();
        } else if (algo == "hybrid") {
            HybridConfig cfg;
            cfg.alpha = alpha;
            cfg.tie = parse_tie_policy(tie);
            cfg.variant.tag = parse_variant_tag(variant);
            cfg.variant.arboricity = arb.resolve(g, src).value;
            HybridResult hybrid = hybrid_dominating_set(g, cfg);
            result = hybrid.result;
            std::cout << "|S|=" << hybrid.prefix_size << " J*=" << hybrid.partial_objective
                      << " X(C)=" << hybrid.weight_on_c << " |H|=" << hybrid.h_size
                      << " |U|=" << hybrid.u_size << '\n';
        } else if (algo == "exact") {
            OracleLimits limits;
            limits.max_vertices = max_n;
            ExactResult exact = exact_gamma(g, limits);
            result.set = exact.set;
            result.algorithm = exact.complete ? "exact" : "exact(incomplete)";
        } else {
            RoundingVariant rv;
            rv.tag = parse_variant_tag(algo);
            rv.arboricity = arb.resolve(g, src).value;
            LpRoundResult lpr = lp_round(g, rv);
            result = lpr.result;
            std::cout << "L* = " << lpr.lp_objective << '\n';
        }
        const bool valid = is_dominating(g, result.set);
        std::cout << result.algorithm << ": size=" << result.size()
                  << " valid=" << (valid ? "yes" : "NO") << '\n';
        if (print_set) {
            for (Vertex v : result.set.sorted())
                std::cout << (v < stats.labels.size() ? stats.labels[v] : std::to_string(v)) << '\n';
        }
        return valid ? 0 : 1;
    }

    if (*lb_cmd) {
        if (prefix_fraction <= 0.0 || prefix_fraction >= 1.0)
            throw input_error("--prefix-fraction must lie in (0,1)");
        Graph g = load_input(lb_input, lb_format);
        GreedyResult greedy = greedy_dominating_set(g);
        const auto prefix =
            static_cast<std::size_t>(std::ceil(prefix_fraction * double(greedy.size())));
        VertexSet a(g.num_vertices());
        for (std::size_t i = 0; i < prefix; ++i) a.insert(greedy.ordered_selection[i]);
        DecompositionBound bound = decomposition_lower_bound(g, separation_from_prefix(g, a));
        std::cout << "prefix=" << prefix << " M*=" << bound.m_star << " N*=" << bound.n_star
                  << " max{M*,N*}=" << bound.value() << '\n';
        return 0;
    }

    if (*bench_cmd) {
        ExperimentSpec spec;
        if (!config_path.empty()) {
            std::ifstream cfg(config_path);
            if (!cfg) throw input_error("cannot open config '" + config_path + "'");
            spec = parse_config(cfg);
        } else if (!suite.empty()) {
            spec = suite_spec(suite, bench_seed);
        } else {
            throw input_error("bench needs --suite or --config");
        }
        if (emit == "markdown") spec.output = OutputFormat::Markdown;
        ExperimentReport report = run_experiment(spec);
        emit_report(report, bench_out, spec.output);
        return 0;
    }

    if (*validate_cmd) {
        IngestStats stats;
        Graph g = load_input(val_input, val_format, &stats);
        std::ifstream set_file(set_path);
        if (!set_file) throw input_error("cannot open set file '" + set_path + "'");
        VertexSet s(g.num_vertices());
        std::string tok;
        while (set_file >> tok) {
            Vertex v = 0;
            bool mapped = false;
            for (std::size_t i = 0; i < stats.labels.size(); ++i)
                if (stats.labels[i] == tok) {
                    v = static_cast<Vertex>(i);
                    mapped = true;
                    break;
                }
            if (!mapped) v = static_cast<Vertex>(std::stoul(tok));
            s.insert(v);
        }
        const bool ok = is_dominating(g, s);
        std::cout << "set size " << s.size() << ": " << (ok ? "dominating" : "NOT dominating")
                  << '\n';
        return ok ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
