#include "mds/rounding.hpp"

#include <chrono>

namespace mds {

namespace {
// LP optima sit exactly on thresholds like 1/(2a+1) up to solver tolerance;
// "weight at least t" must remain inclusive.
constexpr double kThresholdSlack = 1e-9;
}  // namespace

std::string RoundingVariant::name() const {
    switch (tag) {
        case Tag::A1: return "A1(a=" + std::to_string(arboricity) + ")";
        case Tag::A2: return "A2(a=" + std::to_string(arboricity) + ")";
        case Tag::A1Prime: return "A1'(a'=" + std::to_string(arboricity) + ")";
        case Tag::A2Prime: return "A2'(a'=" + std::to_string(arboricity) + ")";
        case Tag::A3: return "A3(a'=" + std::to_string(arboricity) + ")";
        case Tag::Custom: return "round(t=" + std::to_string(custom_threshold) + ")";
    }
    return "?";
}

RoundingVariant::Tag parse_variant_tag(const std::string& name) {
    if (name == "a1") return RoundingVariant::Tag::A1;
    if (name == "a2") return RoundingVariant::Tag::A2;
    if (name == "a1p") return RoundingVariant::Tag::A1Prime;
    if (name == "a2p") return RoundingVariant::Tag::A2Prime;
    if (name == "a3") return RoundingVariant::Tag::A3;
    throw input_error("unknown rounding variant '" + name + "' (expected a1|a2|a1p|a2p|a3)");
}

double threshold_for(const RoundingVariant& variant) {
    using Tag = RoundingVariant::Tag;
    if (variant.tag == Tag::Custom) {
        double t = variant.custom_threshold;
        if (t <= 0.0) throw input_error("custom threshold must be positive");
        return t > 1.0 ? 1.0 : t;
    }
    if (variant.arboricity < 1) throw input_error("arboricity must be a positive integer");
    const double a = variant.arboricity;
    switch (variant.tag) {
        case Tag::A1:
        case Tag::A1Prime: return 1.0 / (3.0 * a);
        case Tag::A2:
        case Tag::A2Prime: return 1.0 / (2.0 * a + 1.0);
        case Tag::A3: {
            double t = 2.0 / a;  // can exceed 1 when a' <= 2; clamp
            return t > 1.0 ? 1.0 : t;
        }
        case Tag::Custom: break;
    }
    throw input_error("unhandled rounding variant");
}

DominatingSetResult threshold_round(const Graph& g, const FractionalSolution& x, double t) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = g.num_vertices();
    VertexSet h(n);
    for (Vertex v = 0; v < n; ++v)
        if (x.weight_of(v) >= t - kThresholdSlack) h.insert(v);
    DominatingSetResult out;
    out.set = VertexSet(n);
    for (Vertex v : h.members()) out.set.insert(v);
    for (Vertex v = 0; v < n; ++v) {
        if (h.contains(v)) continue;
        bool adjacent = false;
        for (Vertex u : g.neighbors(v))
            if (h.contains(u)) {
                adjacent = true;
                break;
            }
        if (!adjacent) out.set.insert(v);  // U member
    }
    out.algorithm = "threshold-round(t=" + std::to_string(t) + ")";
    out.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

VertexSet restricted_round(const Graph& g, const FractionalSolution& x, double t,
                           const VertexSet& c) {
    const std::size_t n = g.num_vertices();
    VertexSet h(n);
    for (Vertex v : c.members())
        if (x.weight_of(v) >= t - kThresholdSlack) h.insert(v);
    VertexSet out(n);
    for (Vertex v : h.members()) out.insert(v);
    for (Vertex v : c.members()) {
        if (h.contains(v)) continue;
        bool adjacent = false;
        for (Vertex u : g.neighbors(v))
            if (h.contains(u)) {
                adjacent = true;
                break;
            }
        if (!adjacent) out.insert(v);  // U = C \ (H ∪ N(H))
    }
    return out;
}

LpRoundResult lp_round(const Graph& g, const RoundingVariant& variant) {
    const auto t0 = std::chrono::steady_clock::now();
    FractionalSolution x = solve_lp(build_lp1(g));
    if (x.status != SolveStatus::Optimal)
        throw input_error("LP1 solve failed for " + variant.name() + ": " + x.diagnostic);
    LpRoundResult out;
    out.lp_objective = x.objective;
    out.result = threshold_round(g, x, threshold_for(variant));
    out.result.algorithm = variant.name();
    out.result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

}  // namespace mds
