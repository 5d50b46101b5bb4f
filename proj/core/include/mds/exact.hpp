#pragma once

#include <optional>

#include "mds/graph.hpp"

namespace mds {

struct OracleLimits {
    std::size_t max_vertices = 32;
    double time_budget_seconds = 60.0;
};

struct ExactResult {
    std::size_t size = 0;
    VertexSet set;
    bool complete = true;  // false when the time budget cut the search short
};

/// Branch-and-bound gamma(G): branch on the lowest-id undominated vertex over
/// its closed neighborhood, prune with the incumbent (and ceil(L*) when
/// given). Ties between minimum sets resolve to the lexicographically
/// smallest. Throws input_error above the vertex cap.
ExactResult exact_gamma(const Graph& g, const OracleLimits& limits = {},
                        std::optional<double> lp_lower_bound = std::nullopt);

}  // namespace mds
