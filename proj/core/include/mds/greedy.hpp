#pragma once

#include <vector>

#include "mds/graph.hpp"

namespace mds {

enum class TiePolicy { MinId, MaxId };

TiePolicy parse_tie_policy(const std::string& name);
std::string tie_policy_name(TiePolicy t);

struct GreedyResult {
    std::vector<Vertex> ordered_selection;  // D = {x_1..x_d} in selection order
    std::vector<std::size_t> gains;         // coverage gain of each selection
    VertexSet set;
    double elapsed_seconds = 0.0;
    TiePolicy tie = TiePolicy::MinId;

    std::size_t size() const { return ordered_selection.size(); }
    DominatingSetResult as_result() const;
};

/// Greedy dominating set: repeatedly pick the vertex covering the most
/// uncovered vertices (closed neighborhood, so a vertex counts itself while
/// uncovered). Gain buckets give O(n+m) amortized time.
GreedyResult greedy_dominating_set(const Graph& g, TiePolicy tie = TiePolicy::MinId);

}  // namespace mds
