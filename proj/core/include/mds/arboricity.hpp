#pragma once

#include <string>

#include "mds/generators.hpp"
#include "mds/graph.hpp"

namespace mds {

enum class EstimateKind { DensityLowerBound, FamilyUpperBound, UserSupplied };

struct ArboricityEstimate {
    int value = 1;  // >= 1
    EstimateKind kind = EstimateKind::UserSupplied;
    std::string context;
};

/// a' = ceil(m / (n-1)), clamped to >= 1. Graphs with n <= 1 get value 1 by
/// convention.
ArboricityEstimate density_lower_bound(const Graph& g);

/// Per-family upper bounds: hypercube(d) -> floor(d/2)+1, queens(k) -> 3(k-1),
/// ktree(n,k) -> ceil(k - (k/2)(k-1)/(n-1)).
ArboricityEstimate family_upper_bound(const FamilyParams& params);

/// Planar graphs have arboricity at most 3.
ArboricityEstimate planar_upper_bound();

/// k-planar graphs: ceil(8*sqrt(k)).
ArboricityEstimate kplanar_upper_bound(int k);

ArboricityEstimate user_supplied(int value);

}  // namespace mds
