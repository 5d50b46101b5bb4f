#pragma once

#include <cstdint>
#include <string>

#include "mds/graph.hpp"

namespace mds {

struct FamilyParams {
    enum class Family { Hypercube, Queens, KTree, TrapStars, TrapClique };
    Family family;
    int d = 0;              // hypercube dimension
    int k = 0;              // queens board side / k-tree parameter
    std::size_t n = 0;      // k-tree vertex count
    int p = 0;              // trap family scale
    std::uint64_t seed = 0; // randomized families

    std::string name() const;
};

/// n = 2^d, labels are binary codes, u~v iff labels differ in one bit.
Graph hypercube(int d);

/// k x k board, row-major squares, adjacent iff same row, column or diagonal.
Graph queens(int k);

/// Maximal treewidth-k graph: (k+1)-clique, then each new vertex joined to a
/// uniformly chosen previously materialized k-clique. m = k*n - k(k+1)/2.
Graph random_ktree(std::size_t n, int k, std::uint64_t seed);

/// Greedy trap of disjoint stars S_1..S_p (|S_i| = 2^i, root first) plus t_1
/// (adjacent to the first half of every S_i) and t_2 (second halves).
/// Stars in index order, then t_1, t_2 last. n = 2^(p+1), gamma = 2.
Graph trap_stars(int p);

/// Greedy trap with clique {s_1..s_p, t_1, t_2} over an independent set split
/// into blocks W_i (|W_i| = 2^i, s_i adjacent to all of W_i, t_1/t_2 to the
/// halves). Blocks first in index order, then s_1..s_p, then t_1, t_2.
Graph trap_clique(int p);

Graph generate(const FamilyParams& params);

/// The two forced dominators of a trap graph, {t_1, t_2}.
VertexSet trap_dominators(const Graph& g);

}  // namespace mds
