#include "mds/arboricity.hpp"

#include <cmath>

namespace mds {

ArboricityEstimate density_lower_bound(const Graph& g) {
    const std::size_t n = g.num_vertices(), m = g.num_edges();
    int value = 1;
    if (n >= 2) value = static_cast<int>(std::max<std::size_t>(1, (m + n - 2) / (n - 1)));
    return {value, EstimateKind::DensityLowerBound, "a'=ceil(m/(n-1))"};
}

ArboricityEstimate family_upper_bound(const FamilyParams& params) {
    switch (params.family) {
        case FamilyParams::Family::Hypercube:
            return {params.d / 2 + 1, EstimateKind::FamilyUpperBound, params.name()};
        case FamilyParams::Family::Queens:
            return {3 * (params.k - 1), EstimateKind::FamilyUpperBound, params.name()};
        case FamilyParams::Family::KTree: {
            // ceil(k - (k/2)(k-1)/(n-1)) = ceil((2k(n-1) - k(k-1)) / (2(n-1)))
            const long long k = params.k, n1 = static_cast<long long>(params.n) - 1;
            const long long num = 2 * k * n1 - k * (k - 1);
            const long long den = 2 * n1;
            return {static_cast<int>((num + den - 1) / den), EstimateKind::FamilyUpperBound,
                    params.name()};
        }
        case FamilyParams::Family::TrapStars:
        case FamilyParams::Family::TrapClique:
            break;  // no published bound; callers use the density bound
    }
    throw input_error("no arboricity upper bound for family '" + params.name() +
                      "'; supply --arboricity explicitly");
}

ArboricityEstimate planar_upper_bound() {
    return {3, EstimateKind::FamilyUpperBound, "planar"};
}

ArboricityEstimate kplanar_upper_bound(int k) {
    if (k < 1) throw input_error("k-planar bound requires k >= 1");
    return {static_cast<int>(std::ceil(8.0 * std::sqrt(static_cast<double>(k)))),
            EstimateKind::FamilyUpperBound, "kplanar(k=" + std::to_string(k) + ")"};
}

ArboricityEstimate user_supplied(int value) {
    if (value < 1) throw input_error("arboricity must be a positive integer");
    return {value, EstimateKind::UserSupplied, "user"};
}

}  // namespace mds
