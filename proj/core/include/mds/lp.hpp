#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mds/graph.hpp"

namespace mds {

/// Sparse covering LP: minimize the sum of all variables subject to one
/// closed-neighborhood row per constraint vertex, variables boxed to [0,1].
struct LpModel {
    std::vector<Vertex> variable_vertices;    // ascending vertex ids
    std::vector<Vertex> constraint_vertices;  // ascending vertex ids
    /// rows[i]: indices into variable_vertices appearing in constraint i,
    /// ascending. Every row is non-empty.
    std::vector<std::vector<std::size_t>> rows;

    std::size_t num_variables() const { return variable_vertices.size(); }
    std::size_t num_constraints() const { return rows.size(); }
};

enum class SolveStatus { Optimal, Infeasible, Error };

struct FractionalSolution {
    std::unordered_map<Vertex, double> weights;  // vertex id -> value in [0,1]
    double objective = 0.0;
    SolveStatus status = SolveStatus::Error;
    std::string diagnostic;

    double weight_of(Vertex v) const {
        auto it = weights.find(v);
        if (it == weights.end())
            throw input_error("no LP weight for vertex " + std::to_string(v));
        return it->second;
    }
    bool has_weight(Vertex v) const { return weights.count(v) != 0; }
};

/// Partition A ∪ B ∪ C of V with no A–C edge (B is a separator).
struct Separation {
    VertexSet a, b, c;
};

/// LP1: one variable and one covering constraint per vertex.
LpModel build_lp1(const Graph& g);

/// Hybrid partial LP: variables over V∖S, constraints over V∖(S∪N[S]).
/// S = ∅ reproduces LP1 exactly.
LpModel build_partial_lp(const Graph& g, const VertexSet& s);

/// Validates the separation (throws input_error naming any A–C edge) and
/// builds LP2 (variables A∪B, constraints A) and LP3 (variables B∪C,
/// constraints C).
std::pair<LpModel, LpModel> build_separation_lps(const Graph& g, const Separation& sep);

/// Builds the separation A = a, B = N(A)∖A, C = rest.
Separation separation_from_prefix(const Graph& g, const VertexSet& a);

/// Solves the model. Optimal solutions are independently re-verified in
/// process: every row within 1e-6 absolute, bounds respected.
FractionalSolution solve_lp(const LpModel& model);

/// Same, minimizing costs·x instead of the plain sum (costs parallel to
/// variable_vertices). The reported objective is still the plain sum, so a
/// slightly perturbed cost vector selects among the alternative optima.
FractionalSolution solve_lp(const LpModel& model, const std::vector<double>& costs);

struct DecompositionBound {
    double m_star = 0.0;  // LP2 optimum
    double n_star = 0.0;  // LP3 optimum
    FractionalSolution lp3_solution;
    double value() const { return m_star > n_star ? m_star : n_star; }
};

/// max{M*, N*} <= L*: a certified lower bound on L* (and gamma) from the two
/// separation LPs.
DecompositionBound decomposition_lower_bound(const Graph& g, const Separation& sep);

/// One line per constraint: constraint vertex id followed by the variable
/// vertex ids in its row (debugging aid).
void dump_model(const LpModel& model, std::ostream& out);

}  // namespace mds
