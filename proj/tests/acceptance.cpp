// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 10 is skipped when the optional datasets are absent.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mds/arboricity.hpp"
#include "mds/exact.hpp"
#include "mds/generators.hpp"
#include "mds/greedy.hpp"
#include "mds/harness.hpp"
#include "mds/hybrid.hpp"
#include "mds/ingest.hpp"
#include "mds/lp.hpp"
#include "mds/rounding.hpp"

using namespace mds;

namespace {

struct Outcome {
    bool pass = true;
    bool skipped = false;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

Graph random_graph(std::size_t n, double density, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Edge> edges;
    for (Vertex u = 0; u + 1 < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (unit(rng) < density) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

double lp1_objective(const Graph& g) {
    auto x = solve_lp(build_lp1(g));
    if (x.status != SolveStatus::Optimal) throw input_error("LP1 solve failed: " + x.diagnostic);
    return x.objective;
}

// Exact Nash-Williams density max over all induced subgraphs (n <= 20 or so):
// a verified arboricity upper bound for the small random corpus.
int exact_arboricity_bound(const Graph& g) {
    const std::size_t n = g.num_vertices();
    int best = 1;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int nh = __builtin_popcount(mask);
        if (nh < 2) continue;
        std::size_t mh = 0;
        for (Vertex u = 0; u < n; ++u) {
            if (!(mask & (1u << u))) continue;
            for (Vertex v : g.neighbors(u))
                if (v > u && (mask & (1u << v))) ++mh;
        }
        const int dens = int((mh + std::size_t(nh) - 2) / std::size_t(nh - 1));
        if (dens > best) best = dens;
    }
    return best;
}

Outcome criterion1() {
    Outcome out;
    std::ostringstream seen;
    for (int d = 5; d <= 12; ++d) {
        const double expected = std::pow(2.0, d) / double(d + 1);
        const double got = lp1_objective(hypercube(d));
        seen << (d > 5 ? " " : "") << format_ratio(got);
        if (std::abs(got - expected) > 0.01)
            out.fail("d=" + std::to_string(d) + " L*=" + std::to_string(got) + " expected " +
                     std::to_string(expected));
    }
    if (out.pass) out.detail = "L* = " + seen.str();
    return out;
}

Outcome criterion2() {
    Outcome out;
    auto check = [&out](const char* what, std::size_t got, std::size_t want) {
        if (got != want)
            out.fail(std::string(what) + ": got " + std::to_string(got) + ", want " +
                     std::to_string(want));
    };
    check("hypercube(5).m", hypercube(5).num_edges(), 80);
    check("hypercube(12).m", hypercube(12).num_edges(), 24576);
    check("queens(15).n", queens(15).num_vertices(), 225);
    check("queens(15).m", queens(15).num_edges(), 5180);
    check("queens(30).n", queens(30).num_vertices(), 900);
    check("queens(30).m", queens(30).num_edges(), 43210);
    for (std::uint64_t seed : {0ull, 1ull, 123456789ull}) {
        check("ktree(2000,5).m", random_ktree(2000, 5, seed).num_edges(), 9985);
        check("ktree(20000,5).m", random_ktree(20000, 5, seed).num_edges(), 99985);
    }
    if (out.pass) out.detail = "all generator counts exact";
    return out;
}

Outcome criterion3() {
    Outcome out;
    for (int p = 2; p <= 10; ++p) {
        {
            Graph g = trap_stars(p);
            auto r = lp_round(g, {RoundingVariant::Tag::A1, 3});  // t = 1/9
            if (r.result.size() != 2 || !is_dominating(g, r.result.set))
                out.fail("trap_stars p=" + std::to_string(p) + " size " +
                         std::to_string(r.result.size()));
        }
        {
            Graph g = trap_clique(p);
            RoundingVariant v{RoundingVariant::Tag::A1Prime, density_lower_bound(g).value};
            auto r = lp_round(g, v);
            if (r.result.size() != 2 || !is_dominating(g, r.result.set))
                out.fail("trap_clique p=" + std::to_string(p) + " size " +
                         std::to_string(r.result.size()));
            if (std::abs(r.lp_objective - 2.0) > 1e-4)
                out.fail("trap_clique p=" + std::to_string(p) +
                         " L*=" + std::to_string(r.lp_objective));
        }
        if (p <= 4) {
            OracleLimits limits;
            limits.max_vertices = 40;
            for (Graph g : {trap_stars(p), trap_clique(p)})
                if (exact_gamma(g, limits).size != 2)
                    out.fail("exact gamma != 2 at p=" + std::to_string(p));
        }
    }
    if (out.pass) out.detail = "rounded size 2 and L*=2.00 on every trap, gamma=2 verified p<=4";
    return out;
}

Outcome criterion4() {
    Outcome out;
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int graphs = 0, checks = 0;
    auto row_weight = [](const LpModel& lp, const FractionalSolution& x, std::size_t row) {
        double sum = 0.0;
        for (std::size_t j : lp.rows[row]) sum += x.weight_of(lp.variable_vertices[j]);
        return sum;
    };
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 8 + std::size_t(trial % 43);
        Graph g = random_graph(n, 0.03 + 0.4 * unit(rng), rng);
        auto x = solve_lp(build_lp1(g));
        if (x.status != SolveStatus::Optimal) {
            out.fail("LP1 failed on trial " + std::to_string(trial));
            continue;
        }
        ++graphs;
        auto greedy = greedy_dominating_set(g);
        for (double f : {0.25, 0.5, 0.75}) {
            const std::size_t prefix = std::size_t(std::ceil(f * double(greedy.size())));
            VertexSet a(n);
            for (std::size_t i = 0; i < prefix; ++i) a.insert(greedy.ordered_selection[i]);
            Separation sep = separation_from_prefix(g, a);
            auto bound = decomposition_lower_bound(g, sep);
            if (bound.value() > x.objective + 1e-6)
                out.fail("max{M*,N*}=" + std::to_string(bound.value()) + " > L*=" +
                         std::to_string(x.objective) + " on trial " + std::to_string(trial));
            auto [lp2, lp3] = build_separation_lps(g, sep);
            for (std::size_t r = 0; r < lp2.num_constraints(); ++r)
                if (row_weight(lp2, x, r) < 1.0 - 1e-6) out.fail("restricted x infeasible for LP2");
            for (std::size_t r = 0; r < lp3.num_constraints(); ++r)
                if (row_weight(lp3, x, r) < 1.0 - 1e-6) out.fail("restricted x infeasible for LP3");
            ++checks;
        }
    }
    if (out.pass)
        out.detail = std::to_string(graphs) + " graphs x 3 prefixes, " + std::to_string(checks) +
                     " decomposition bounds within L*";
    return out;
}

Outcome criterion5() {
    Outcome out;
    struct Instance {
        FamilyParams params;
        Graph g;
        int a;
    };
    std::vector<Instance> instances;
    for (int d = 5; d <= 10; ++d) {
        FamilyParams p{FamilyParams::Family::Hypercube, d};
        instances.push_back({p, generate(p), family_upper_bound(p).value});
    }
    for (int k : {10, 15, 20}) {
        FamilyParams p{FamilyParams::Family::Queens, 0, k};
        instances.push_back({p, generate(p), family_upper_bound(p).value});
    }
    for (std::size_t n : {1000, 3000, 5000}) {
        FamilyParams p{FamilyParams::Family::KTree, 0, 5, n, 0, 7};
        instances.push_back({p, generate(p), family_upper_bound(p).value});
    }
    int checked = 0;
    for (const auto& inst : instances) {
        auto greedy = greedy_dominating_set(inst.g);
        auto plain = lp_round(inst.g, {RoundingVariant::Tag::A1, inst.a});
        for (double alpha : {0.0, 0.5, 1.0}) {
            auto hyb =
                hybrid_dominating_set(inst.g, {alpha, {RoundingVariant::Tag::A1, inst.a}});
            const double cap =
                std::ceil(alpha * double(greedy.size())) + 3.0 * inst.a * hyb.weight_on_c;
            if (double(hyb.result.size()) > cap + 1e-6)
                out.fail(inst.params.name() + " alpha=" + std::to_string(alpha) + ": " +
                         std::to_string(hyb.result.size()) + " > " + std::to_string(cap));
            if (alpha == 0.0 && hyb.result.set.sorted() != plain.result.set.sorted())
                out.fail(inst.params.name() + ": alpha=0 differs from lp_round");
            if (alpha == 1.0 && hyb.result.set.sorted() != greedy.set.sorted())
                out.fail(inst.params.name() + ": alpha=1 differs from greedy");
            ++checked;
        }
    }
    if (out.pass)
        out.detail = std::to_string(checked) + " hybrid runs within ceil(alpha*d) + 3a*X(C)";
    return out;
}

Outcome criterion6() {
    Outcome out;
    struct Instance {
        std::string id;
        Graph g;
        int a;  // 0 = no verified arboricity bound (skip A1/A2 envelopes)
    };
    std::vector<Instance> instances;
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_graph(4 + std::size_t(trial % 7), 0.05 + 0.7 * unit(rng), rng);
        instances.push_back(
            {"rand" + std::to_string(trial), g, exact_arboricity_bound(g)});
    }
    for (int d = 2; d <= 4; ++d) {
        FamilyParams p{FamilyParams::Family::Hypercube, d};
        instances.push_back({p.name(), generate(p), family_upper_bound(p).value});
    }
    for (int k = 2; k <= 4; ++k) {
        FamilyParams p{FamilyParams::Family::Queens, 0, k};
        instances.push_back({p.name(), generate(p), family_upper_bound(p).value});
    }
    for (std::size_t n : {10, 18, 24}) {
        FamilyParams p{FamilyParams::Family::KTree, 0, 3, n, 0, 11};
        instances.push_back({p.name(), generate(p), family_upper_bound(p).value});
    }
    instances.push_back({"trap_stars(2)", trap_stars(2), 0});
    instances.push_back({"trap_clique(2)", trap_clique(2), 0});

    for (const auto& inst : instances) {
        const Graph& g = inst.g;
        const double lstar = lp1_objective(g);
        const std::size_t gamma = exact_gamma(g).size;
        if (std::ceil(lstar - 1e-6) > double(gamma))
            out.fail(inst.id + ": ceil(L*) > gamma");
        auto greedy = greedy_dominating_set(g);
        if (greedy.size() < gamma) out.fail(inst.id + ": greedy below gamma");
        const double h_bound = (std::log(double(g.max_degree() + 1)) + 1.0) * lstar;
        if (double(greedy.size()) > h_bound + 1e-6)
            out.fail(inst.id + ": greedy " + std::to_string(greedy.size()) + " > (ln(D+1)+1)L* = " +
                     std::to_string(h_bound));
        const int a = inst.a > 0 ? inst.a : density_lower_bound(g).value;
        auto a1 = lp_round(g, {RoundingVariant::Tag::A1, a});
        auto a2 = lp_round(g, {RoundingVariant::Tag::A2, a});
        auto hyb = hybrid_dominating_set(g, {0.5, {RoundingVariant::Tag::A1, a}});
        for (std::size_t size : {a1.result.size(), a2.result.size(), hyb.result.size()})
            if (size < gamma) out.fail(inst.id + ": output below gamma");
        if (inst.a > 0) {
            if (double(a1.result.size()) > 3.0 * inst.a * lstar + 1e-6)
                out.fail(inst.id + ": A1 above 3aL*");
            if (double(a2.result.size()) > (2.0 * inst.a + 1.0) * lstar + 1e-6)
                out.fail(inst.id + ": A2 above (2a+1)L*");
        }
    }
    if (out.pass)
        out.detail = std::to_string(instances.size()) +
                     " instances: ceil(L*) <= gamma <= every output, envelopes hold";
    return out;
}

Outcome criterion7() {
    Outcome out;
    std::mt19937_64 rng(2718);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int algo_trials = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + std::size_t(trial % 29);
        Graph g = random_graph(n, 0.03 + 0.6 * unit(rng), rng);
        VertexSet result(0);
        switch (trial % 5) {
            case 0:
                result = greedy_dominating_set(g, trial % 2 ? TiePolicy::MaxId : TiePolicy::MinId)
                             .set;
                break;
            case 1:
                result = lp_round(g, {RoundingVariant::Tag::A1, density_lower_bound(g).value})
                             .result.set;
                break;
            case 2:
                result = lp_round(g, {RoundingVariant::Tag::A2Prime,
                                      density_lower_bound(g).value})
                             .result.set;
                break;
            case 3:
                result = lp_round(g, {RoundingVariant::Tag::A3, density_lower_bound(g).value})
                             .result.set;
                break;
            case 4:
                result = hybrid_dominating_set(
                             g, {unit(rng), {RoundingVariant::Tag::A1,
                                             density_lower_bound(g).value + 1}})
                             .result.set;
                break;
        }
        if (!is_dominating(g, result)) {
            out.fail("invalid set on algorithm trial " + std::to_string(trial));
            break;
        }
        ++algo_trials;
    }
    int round_trials = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + std::size_t(trial % 49);
        Graph g = random_graph(n, 0.02 + 0.5 * unit(rng), rng);
        FractionalSolution x;
        x.status = SolveStatus::Optimal;
        for (Vertex v = 0; v < n; ++v) x.weights[v] = unit(rng);
        for (Vertex v = 0; v < n; ++v) {
            double sum = x.weights[v];
            for (Vertex u : g.neighbors(v)) sum += x.weights[u];
            if (sum < 1.0) x.weights[v] = 1.0;
        }
        const double t = std::max(1e-9, unit(rng));
        if (!is_dominating(g, threshold_round(g, x, t).set)) {
            out.fail("threshold_round invalid on trial " + std::to_string(trial));
            break;
        }
        ++round_trials;
    }
    if (out.pass)
        out.detail = std::to_string(algo_trials) + " algorithm trials + " +
                     std::to_string(round_trials) + " threshold_round trials all dominate";
    return out;
}

Outcome criterion8() {
    Outcome out;
    std::ostringstream note;
    bool hit16 = false;
    std::size_t d7_min = 0, d7_max = 0;
    for (int d = 5; d <= 12; ++d) {
        const double lstar = std::pow(2.0, d) / double(d + 1);
        const std::size_t lo = greedy_dominating_set(hypercube(d), TiePolicy::MinId).size();
        const std::size_t hi = greedy_dominating_set(hypercube(d), TiePolicy::MaxId).size();
        for (std::size_t size : {lo, hi}) {
            const double ratio = double(size) / lstar;
            if (ratio < 1.0 - 1e-9 || ratio > 1.80)
                out.fail("d=" + std::to_string(d) + " greedy ratio " + format_ratio(ratio) +
                         " outside [1.00, 1.80]");
        }
        if (d == 7) {
            d7_min = lo;
            d7_max = hi;
            hit16 = lo == 16 || hi == 16;
            if (std::min(lo, hi) > 28)
                out.fail("d=7 greedy exceeds the hard bound 28");
        }
    }
    note << "d=7 greedy sizes: min-id " << d7_min << ", max-id " << d7_max
         << (hit16 ? " (perfect code found)" : " (16 not reached; <= 28 bound holds)");
    if (out.pass) out.detail = "ratios within [1.00, 1.80]; " + note.str();
    return out;
}

Outcome criterion9() {
    Outcome out;
    Graph g = random_ktree(20000, 5, 42);
    const auto t0 = std::chrono::steady_clock::now();
    auto greedy = greedy_dominating_set(g);
    const double greedy_secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (greedy_secs >= 1.0)
        out.fail("greedy on ktree(20000,5) took " + std::to_string(greedy_secs) + "s");
    if (!is_dominating(g, greedy.set)) out.fail("greedy output invalid");

    ExperimentSpec spec;
    spec.graphs.push_back({FamilyParams{FamilyParams::Family::KTree, 0, 5, 20000, 0, 42},
                           "ktree-20000-5"});
    spec.algorithms.push_back({AlgorithmSpec::Kind::Greedy, "greedy"});
    spec.algorithms.push_back(
        {AlgorithmSpec::Kind::Round, "A1", TiePolicy::MinId, RoundingVariant::Tag::A1});
    spec.algorithms.push_back({AlgorithmSpec::Kind::Hybrid, "A1-hybrid", TiePolicy::MinId,
                               RoundingVariant::Tag::A1, 0.5});
    spec.algorithms.push_back(
        {AlgorithmSpec::Kind::Round, "A2", TiePolicy::MinId, RoundingVariant::Tag::A2});
    spec.algorithms.push_back({AlgorithmSpec::Kind::Hybrid, "A2-hybrid", TiePolicy::MinId,
                               RoundingVariant::Tag::A2, 0.5});
    const auto t1 = std::chrono::steady_clock::now();
    auto report = run_experiment(spec);
    const double pipeline_secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
    if (pipeline_secs >= 120.0)
        out.fail("full pipeline took " + std::to_string(pipeline_secs) + "s");
    char buf[128];
    std::snprintf(buf, sizeof(buf), "greedy %.2fs, L* + 5 algorithms %.1fs on n=20000",
                  greedy_secs, pipeline_secs);
    if (out.pass) out.detail = buf;
    return out;
}

Outcome criterion10() {
    Outcome out;
    const std::filesystem::path gplus = "data/gplus_500.txt";
    const std::filesystem::path pokec = "data/pokec_500.txt";
    if (!std::filesystem::exists(gplus) || !std::filesystem::exists(pokec)) {
        out.skipped = true;
        out.detail = "datasets absent (expected " + gplus.string() + ", " + pokec.string() + ")";
        return out;
    }
    auto run = [&out](const std::filesystem::path& path, const char* id, std::size_t want_size,
                      std::optional<double> want_lstar) {
        Graph g = read_graph_file(path.string(), GraphFormat::SnapEdgeList);
        const double lstar = lp1_objective(g);
        if (want_lstar && std::abs(lstar - *want_lstar) > 0.01)
            out.fail(std::string(id) + ": L*=" + std::to_string(lstar));
        const int aprime = density_lower_bound(g).value;
        const std::size_t greedy = greedy_dominating_set(g).size();
        const std::size_t a1p =
            lp_round(g, {RoundingVariant::Tag::A1Prime, aprime}).result.size();
        const std::size_t a3 = lp_round(g, {RoundingVariant::Tag::A3, aprime}).result.size();
        for (std::size_t size : {greedy, a1p, a3})
            if (size != want_size)
                out.fail(std::string(id) + ": size " + std::to_string(size) + " != " +
                         std::to_string(want_size));
    };
    run(gplus, "gplus-500", 42, 42.0);
    run(pokec, "pokec-500", 16, std::nullopt);
    if (out.pass) out.detail = "real-data fixtures reproduced";
    return out;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"hypercube L* reproduction", criterion1},
        {"generator exactness", criterion2},
        {"trap-family optima", criterion3},
        {"decomposition bound suite", criterion4},
        {"hybrid size-bound suite", criterion5},
        {"oracle-equivalence suite", criterion6},
        {"validity fuzzing", criterion7},
        {"hypercube greedy ratio envelope", criterion8},
        {"performance budget", criterion9},
        {"real-data fixtures", criterion10},
    };
    bool all_pass = true;
    int index = 0;
    for (const auto& [name, fn] : criteria) {
        ++index;
        Outcome out;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            out = fn();
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const char* verdict = out.skipped ? "SKIP" : out.pass ? "PASS" : "FAIL";
        std::printf("criterion %2d [%s] %s (%.1fs): %s\n", index, verdict, name, secs,
                    out.detail.c_str());
        std::fflush(stdout);
        if (!out.pass) all_pass = false;
    }
    return all_pass ? 0 : 1;
}
