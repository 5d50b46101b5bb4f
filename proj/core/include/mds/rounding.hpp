#pragma once

#include <string>

#include "mds/graph.hpp"
#include "mds/lp.hpp"

namespace mds {

/// Threshold-rounding variants. A1/A2 take a true arboricity upper bound,
/// the primed variants take the density lower bound a', A3 uses 2/a'.
struct RoundingVariant {
    enum class Tag { A1, A2, A1Prime, A2Prime, A3, Custom };
    Tag tag = Tag::A1;
    int arboricity = 1;             // a or a' depending on tag
    double custom_threshold = 1.0;  // when tag == Custom

    std::string name() const;
};

RoundingVariant::Tag parse_variant_tag(const std::string& name);

/// A1/A1' -> 1/(3a); A2/A2' -> 1/(2a+1); A3 -> min(2/a', 1); Custom -> t
/// clamped to (0, 1]. Throws on nonpositive arboricity.
double threshold_for(const RoundingVariant& variant);

/// H = {v : x_v >= t - 1e-9}, U = {v : N[v] ∩ H = ∅}; returns H ∪ U.
/// Requires a weight for every vertex of g.
DominatingSetResult threshold_round(const Graph& g, const FractionalSolution& x, double t);

/// Theorem-1 restricted rounding: H = {v ∈ C : x_v >= t - 1e-9},
/// U = C ∖ (H ∪ N(H)), returns H ∪ U ⊆ C. N(H) is taken in the full graph.
VertexSet restricted_round(const Graph& g, const FractionalSolution& x, double t,
                           const VertexSet& c);

struct LpRoundResult {
    DominatingSetResult result;
    double lp_objective = 0.0;  // L*
};

/// End-to-end LP rounding: build LP1, solve, threshold-round.
LpRoundResult lp_round(const Graph& g, const RoundingVariant& variant);

}  // namespace mds
