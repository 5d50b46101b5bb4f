#include "mds/hybrid.hpp"

#include <chrono>
#include <cmath>

namespace mds {

HybridResult hybrid_dominating_set(const Graph& g, const HybridConfig& cfg) {
    if (cfg.alpha < 0.0 || cfg.alpha > 1.0)
        throw input_error("hybrid alpha must lie in [0,1]");
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = g.num_vertices();

    GreedyResult greedy = greedy_dominating_set(g, cfg.tie);
    const std::size_t d = greedy.size();
    const std::size_t prefix = static_cast<std::size_t>(std::ceil(cfg.alpha * double(d)));

    VertexSet s(n);
    for (std::size_t i = 0; i < prefix; ++i) s.insert(greedy.ordered_selection[i]);

    Separation sep = separation_from_prefix(g, s);
    LpModel partial = build_partial_lp(g, s);

    // The partial LP usually has many alternative optima; a hair of extra
    // cost on the B variables steers the weight onto C, where the restricted
    // rounding can see it (the |S| + 3a·X(C) guarantee charges against X(C)).
    FractionalSolution x;
    if (s.empty()) {
        x = solve_lp(partial);
    } else {
        std::vector<double> costs(partial.num_variables(), 1.0);
        for (std::size_t i = 0; i < partial.num_variables(); ++i)
            if (sep.b.contains(partial.variable_vertices[i])) costs[i] = 1.0 + 1e-6;
        x = solve_lp(partial, costs);
    }
    if (x.status != SolveStatus::Optimal)
        throw input_error("partial LP solve failed: " + x.diagnostic);
    const double t = threshold_for(cfg.variant);
    VertexSet rounded = restricted_round(g, x, t, sep.c);

    HybridResult out;
    out.prefix_size = prefix;
    out.greedy_size = d;
    out.partial_objective = x.objective;
    for (Vertex v : sep.c.members()) out.weight_on_c += x.weight_of(v);
    for (Vertex v : rounded.members())
        if (x.weight_of(v) >= t - 1e-9) ++out.h_size;
    out.u_size = rounded.size() - out.h_size;

    out.result.set = VertexSet(n);
    for (Vertex v : s.members()) out.result.set.insert(v);
    for (Vertex v : rounded.members()) out.result.set.insert(v);
    out.result.algorithm = "hybrid(alpha=" + std::to_string(cfg.alpha) + "," + cfg.variant.name() + ")";
    out.result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

}  // namespace mds
