#pragma once

#include "mds/graph.hpp"
#include "mds/greedy.hpp"
#include "mds/lp.hpp"
#include "mds/rounding.hpp"

namespace mds {

struct HybridConfig {
    double alpha = 0.5;  // fraction of the greedy order forced into S
    RoundingVariant variant;
    TiePolicy tie = TiePolicy::MinId;
};

struct HybridResult {
    DominatingSetResult result;
    std::size_t prefix_size = 0;       // |S| = ceil(alpha * d)
    std::size_t greedy_size = 0;       // d
    double partial_objective = 0.0;    // J*
    double weight_on_c = 0.0;          // X(C), partial-LP weight on C
    std::size_t h_size = 0;
    std::size_t u_size = 0;
};

/// Algorithm: greedy order -> force prefix S -> partial LP on V∖S ->
/// restricted rounding on C = V∖(S∪N(S)) -> S ∪ H ∪ U.
HybridResult hybrid_dominating_set(const Graph& g, const HybridConfig& cfg);

}  // namespace mds
