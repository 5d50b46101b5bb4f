#include "mds/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "mds/exact.hpp"

namespace mds {

Graph GraphSource::load() const {
    if (std::holds_alternative<FamilyParams>(source))
        return generate(std::get<FamilyParams>(source));
    const auto& file = std::get<FileSource>(source);
    return read_graph_file(file.path, file.format);
}

ArboricityEstimate ArboricitySource::resolve(const Graph& g, const GraphSource& src) const {
    switch (kind) {
        case Kind::UserValue: return user_supplied(user_value);
        case Kind::DensityLowerBound: return density_lower_bound(g);
        case Kind::FamilyFormula:
            if (std::holds_alternative<FamilyParams>(src.source)) {
                const auto& params = std::get<FamilyParams>(src.source);
                if (params.family != FamilyParams::Family::TrapStars &&
                    params.family != FamilyParams::Family::TrapClique)
                    return family_upper_bound(params);
            }
            // file inputs and trap families have no family formula
            return density_lower_bound(g);
    }
    throw input_error("unreachable arboricity source");
}

std::string format_ratio(double value) {
    // half-up; the epsilon keeps decimal halves like 1.005 (stored as
    // 1.00499...) on the upper side
    const double rounded = std::floor(value * 100.0 + 0.5 + 1e-9) / 100.0;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", rounded);
    return buf;
}

namespace {

RoundingVariant make_variant(RoundingVariant::Tag tag, const Graph& g,
                             const ArboricitySource& arb, const GraphSource& src) {
    RoundingVariant variant;
    variant.tag = tag;
    // Primed variants and A3 are defined on the density bound a'; A1/A2 take
    // whatever arboricity source the spec selected (family formula default).
    const bool density_based = tag == RoundingVariant::Tag::A1Prime ||
                               tag == RoundingVariant::Tag::A2Prime ||
                               tag == RoundingVariant::Tag::A3;
    if (density_based && arb.kind != ArboricitySource::Kind::UserValue)
        variant.arboricity = density_lower_bound(g).value;
    else
        variant.arboricity = arb.resolve(g, src).value;
    return variant;
}

AlgorithmCell run_algorithm(const Graph& g, const AlgorithmSpec& algo,
                            const ArboricitySource& arb, const GraphSource& src,
                            double bound) {
    DominatingSetResult result;
    switch (algo.kind) {
        case AlgorithmSpec::Kind::Greedy:
            result = greedy_dominating_set(g, algo.tie).as_result();
            break;
        case AlgorithmSpec::Kind::Round:
            result = lp_round(g, make_variant(algo.variant_tag, g, arb, src)).result;
            break;
        case AlgorithmSpec::Kind::Hybrid: {
            HybridConfig cfg;
            cfg.alpha = algo.alpha;
            cfg.variant = make_variant(algo.variant_tag, g, arb, src);
            cfg.tie = algo.tie;
            result = hybrid_dominating_set(g, cfg).result;
            break;
        }
        case AlgorithmSpec::Kind::Exact: {
            OracleLimits limits;
            limits.max_vertices = algo.max_n;
            const auto t0 = std::chrono::steady_clock::now();
            ExactResult exact = exact_gamma(g, limits);
            result.set = exact.set;
            result.algorithm = "exact";
            result.elapsed_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            break;
        }
    }
    AlgorithmCell cell;
    cell.name = algo.label.empty() ? result.algorithm : algo.label;
    cell.size = result.size();
    cell.elapsed_seconds = result.elapsed_seconds;
    cell.valid = is_dominating(g, result.set);
    if (!cell.valid)
        throw input_error("algorithm '" + cell.name + "' produced an invalid dominating set");
    cell.ratio = bound > 0 ? double(cell.size) / bound : 0.0;
    return cell;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentSpec& spec) {
    if (spec.algorithms.empty()) throw input_error("experiment needs at least one algorithm");
    if (spec.bound_mode == LowerBoundMode::Decomposition &&
        (spec.prefix_fraction <= 0.0 || spec.prefix_fraction >= 1.0))
        throw input_error("decomposition mode needs a prefix fraction in (0,1)");

    ExperimentReport report;
    for (const auto& src : spec.graphs) {
        Graph g = src.load();
        ReportRow row;
        row.graph_id = src.id;
        row.n = g.num_vertices();
        row.m = g.num_edges();
        ArboricityEstimate arb = spec.arboricity.resolve(g, src);
        row.arboricity_note = "a=" + std::to_string(arb.value) + " (" + arb.context + ")";

        if (spec.bound_mode == LowerBoundMode::Lp1) {
            FractionalSolution sol = solve_lp(build_lp1(g));
            if (sol.status != SolveStatus::Optimal)
                throw input_error("LP1 failed on '" + src.id + "' (" + sol.diagnostic +
                                  "); retry with the decomposition lower bound "
                                  "(--prefix-fraction)");
            row.bound_label = "L*";
            row.bound = sol.objective;
        } else {
            GreedyResult greedy = greedy_dominating_set(g);
            const std::size_t prefix =
                static_cast<std::size_t>(std::ceil(spec.prefix_fraction * double(greedy.size())));
            VertexSet a(g.num_vertices());
            for (std::size_t i = 0; i < prefix; ++i) a.insert(greedy.ordered_selection[i]);
            DecompositionBound bound = decomposition_lower_bound(g, separation_from_prefix(g, a));
            row.bound_label = "max{M*,N*}";
            row.bound = bound.value();
        }

        for (const auto& algo : spec.algorithms)
            row.cells.push_back(run_algorithm(g, algo, spec.arboricity, src, row.bound));
        report.rows.push_back(std::move(row));
    }
    return report;
}

void ExperimentReport::write_csv(std::ostream& out) const {
    if (rows.empty()) return;
    out << "graph,n,m,bound_label,bound";
    for (const auto& cell : rows.front().cells)
        out << ',' << cell.name << " size," << cell.name << "/bound," << cell.name << " seconds";
    out << '\n';
    for (const auto& row : rows) {
        out << row.graph_id << ',' << row.n << ',' << row.m << ',' << row.bound_label << ','
            << format_ratio(row.bound);
        for (const auto& cell : row.cells) {
            char secs[32];
            std::snprintf(secs, sizeof(secs), "%.3f", cell.elapsed_seconds);
            out << ',' << cell.size << ',' << format_ratio(cell.ratio) << ',' << secs;
        }
        out << '\n';
    }
}

void ExperimentReport::write_markdown(std::ostream& out) const {
    if (rows.empty()) return;
    out << "| graph | n, m | " << rows.front().bound_label << " |";
    for (const auto& cell : rows.front().cells) out << ' ' << cell.name << " |";
    out << "\n|---|---|---|";
    for (std::size_t i = 0; i < rows.front().cells.size(); ++i) out << "---|";
    out << '\n';
    for (const auto& row : rows) {
        out << "| " << row.graph_id << " | " << row.n << ", " << row.m << " | "
            << format_ratio(row.bound) << " |";
        for (const auto& cell : row.cells) out << ' ' << format_ratio(cell.ratio) << " |";
        out << '\n';
    }
}

ExperimentSpec suite_spec(const std::string& name, std::uint64_t seed) {
    ExperimentSpec spec;
    spec.seed = seed;
    auto add_family = [&spec](FamilyParams params) {
        spec.graphs.push_back({params, params.name()});
    };
    auto standard_algorithms = [&spec] {
        spec.algorithms.push_back({AlgorithmSpec::Kind::Greedy, "greedy"});
        spec.algorithms.push_back(
            {AlgorithmSpec::Kind::Round, "A1", TiePolicy::MinId, RoundingVariant::Tag::A1});
        spec.algorithms.push_back(
            {AlgorithmSpec::Kind::Hybrid, "A1-hybrid", TiePolicy::MinId, RoundingVariant::Tag::A1, 0.5});
        spec.algorithms.push_back(
            {AlgorithmSpec::Kind::Round, "A2", TiePolicy::MinId, RoundingVariant::Tag::A2});
        spec.algorithms.push_back(
            {AlgorithmSpec::Kind::Hybrid, "A2-hybrid", TiePolicy::MinId, RoundingVariant::Tag::A2, 0.5});
    };
    if (name == "hypercubes") {
        for (int d = 5; d <= 12; ++d)
            add_family({FamilyParams::Family::Hypercube, d});
        standard_algorithms();
    } else if (name == "queens") {
        for (int k = 15; k <= 30; ++k)
            add_family({FamilyParams::Family::Queens, 0, k});
        standard_algorithms();
    } else if (name == "ktrees") {
        for (std::size_t n = 2000; n <= 20000; n += 2000)
            add_family({FamilyParams::Family::KTree, 0, 5, n, 0, seed});
        standard_algorithms();
    } else if (name == "traps") {
        for (int p = 2; p <= 10; ++p) {
            add_family({FamilyParams::Family::TrapStars, 0, 0, 0, p});
            add_family({FamilyParams::Family::TrapClique, 0, 0, 0, p});
        }
        spec.algorithms.push_back({AlgorithmSpec::Kind::Greedy, "greedy"});
        spec.algorithms.push_back(
            {AlgorithmSpec::Kind::Round, "A1'", TiePolicy::MinId, RoundingVariant::Tag::A1Prime});
        spec.algorithms.push_back(
            {AlgorithmSpec::Kind::Round, "A3", TiePolicy::MinId, RoundingVariant::Tag::A3});
        spec.arboricity.kind = ArboricitySource::Kind::DensityLowerBound;
    } else {
        throw input_error("unknown suite '" + name +
                          "' (expected hypercubes, queens, ktrees or traps)");
    }
    return spec;
}

ExperimentSpec parse_config(std::istream& in) {
    std::string suite;
    std::uint64_t seed = 0;
    OutputFormat output = OutputFormat::Csv;
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::pair<std::string, std::string>> extras;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error(lineno, "expected key=value, got '" + line + "'");
        std::string key = line.substr(0, eq), value = line.substr(eq + 1);
        if (key == "suite") suite = value;
        else if (key == "seed") seed = std::stoull(value);
        else if (key == "emit") {
            if (value == "csv") output = OutputFormat::Csv;
            else if (value == "markdown") output = OutputFormat::Markdown;
            else throw parse_error(lineno, "emit must be csv or markdown");
        } else {
            throw parse_error(lineno, "unknown config key '" + key + "'");
        }
    }
    if (suite.empty()) throw input_error("config must name a suite");
    ExperimentSpec spec = suite_spec(suite, seed);
    spec.output = output;
    return spec;
}

}  // namespace mds
