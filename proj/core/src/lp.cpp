#include "mds/lp.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "lp_worker.hpp"

namespace mds {

namespace {

constexpr double kFeasibilityTol = 1e-6;

/// Row for constraint vertex v over the variables listed in var_index
/// (var_index[u] = position of u, or npos if u owns no variable).
constexpr std::size_t kNoVar = static_cast<std::size_t>(-1);

std::vector<std::size_t> make_var_index(std::size_t n, const std::vector<Vertex>& vars) {
    std::vector<std::size_t> index(n, kNoVar);
    for (std::size_t i = 0; i < vars.size(); ++i) index[vars[i]] = i;
    return index;
}

std::vector<std::size_t> closed_neighborhood_row(const Graph& g, Vertex v,
                                                 const std::vector<std::size_t>& var_index) {
    std::vector<std::size_t> row;
    if (var_index[v] != kNoVar) row.push_back(var_index[v]);
    for (Vertex u : g.neighbors(v))
        if (var_index[u] != kNoVar) row.push_back(var_index[u]);
    std::sort(row.begin(), row.end());
    return row;
}

}  // namespace

LpModel build_lp1(const Graph& g) {
    const std::size_t n = g.num_vertices();
    LpModel model;
    model.variable_vertices.resize(n);
    for (Vertex v = 0; v < n; ++v) model.variable_vertices[v] = v;
    model.constraint_vertices = model.variable_vertices;
    auto var_index = make_var_index(n, model.variable_vertices);
    model.rows.reserve(n);
    for (Vertex v = 0; v < n; ++v) model.rows.push_back(closed_neighborhood_row(g, v, var_index));
    return model;
}

LpModel build_partial_lp(const Graph& g, const VertexSet& s) {
    const std::size_t n = g.num_vertices();
    LpModel model;
    for (Vertex v = 0; v < n; ++v)
        if (!s.contains(v)) model.variable_vertices.push_back(v);
    auto var_index = make_var_index(n, model.variable_vertices);

    VertexSet dominated_by_s = open_neighborhood_of_set(g, s);
    for (Vertex v = 0; v < n; ++v) {
        if (s.contains(v) || dominated_by_s.contains(v)) continue;
        model.constraint_vertices.push_back(v);
        model.rows.push_back(closed_neighborhood_row(g, v, var_index));
    }
    return model;
}

Separation separation_from_prefix(const Graph& g, const VertexSet& a) {
    Separation sep;
    sep.a = a;
    sep.b = open_neighborhood_of_set(g, a);
    sep.c = VertexSet(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!sep.a.contains(v) && !sep.b.contains(v)) sep.c.insert(v);
    return sep;
}

std::pair<LpModel, LpModel> build_separation_lps(const Graph& g, const Separation& sep) {
    const std::size_t n = g.num_vertices();
    if (sep.a.size() + sep.b.size() + sep.c.size() != n)
        throw input_error("separation does not partition the vertex set");
    for (Vertex v = 0; v < n; ++v) {
        int count = sep.a.contains(v) + sep.b.contains(v) + sep.c.contains(v);
        if (count != 1)
            throw input_error("vertex " + std::to_string(v) + " appears in " +
                              std::to_string(count) + " separation parts");
    }
    for (Vertex v : sep.a.members())
        for (Vertex u : g.neighbors(v))
            if (sep.c.contains(u))
                throw input_error("invalid separation: edge (" + std::to_string(v) + "," +
                                  std::to_string(u) + ") joins A and C");

    auto build = [&](const VertexSet& vars_a, const VertexSet& vars_b,
                     const VertexSet& constraints) {
        LpModel model;
        for (Vertex v = 0; v < n; ++v)
            if (vars_a.contains(v) || vars_b.contains(v)) model.variable_vertices.push_back(v);
        auto var_index = make_var_index(n, model.variable_vertices);
        for (Vertex v = 0; v < n; ++v)
            if (constraints.contains(v)) {
                model.constraint_vertices.push_back(v);
                model.rows.push_back(closed_neighborhood_row(g, v, var_index));
            }
        return model;
    };
    // LP2: variables A∪B, constraints A; LP3: variables B∪C, constraints C.
    return {build(sep.a, sep.b, sep.a), build(sep.b, sep.c, sep.c)};
}

namespace {

FractionalSolution solve_lp_impl(const LpModel& model, const std::vector<double>* costs) {
    FractionalSolution sol;
    for (std::size_t i = 0; i < model.rows.size(); ++i)
        if (model.rows[i].empty()) {
            sol.status = SolveStatus::Error;
            sol.diagnostic = "malformed model: empty constraint row for vertex " +
                             std::to_string(model.constraint_vertices[i]);
            return sol;
        }

    // Dual simplex returns clean vertex solutions; IPM is markedly faster on
    // the large dense-column models (hypercube d >= 12).
    const std::string method = model.num_constraints() > 3000 ? "ipm" : "simplex";
    auto reply =
        detail::LpWorker::instance().solve(model.num_variables(), model.rows, method, costs);

    if (reply.status == "infeasible") {
        sol.status = SolveStatus::Infeasible;
        sol.diagnostic = "covering LP reported infeasible (internal error: all-ones is feasible)";
        return sol;
    }
    if (reply.status != "optimal") {
        sol.status = SolveStatus::Error;
        sol.diagnostic = reply.message;
        return sol;
    }

    double objective = 0.0;
    for (std::size_t i = 0; i < model.num_variables(); ++i) {
        double w = std::min(1.0, std::max(0.0, reply.values[i]));
        sol.weights.emplace(model.variable_vertices[i], w);
        objective += w;
    }
    sol.objective = objective;

    // Never trust solver residuals: re-verify every row.
    for (std::size_t i = 0; i < model.rows.size(); ++i) {
        double row_sum = 0.0;
        for (std::size_t idx : model.rows[i]) row_sum += reply.values[idx];
        if (row_sum < 1.0 - kFeasibilityTol) {
            sol.status = SolveStatus::Error;
            sol.diagnostic = "solution violates constraint for vertex " +
                             std::to_string(model.constraint_vertices[i]) +
                             " (row sum " + std::to_string(row_sum) + ")";
            return sol;
        }
    }
    sol.status = SolveStatus::Optimal;
    return sol;
}

}  // namespace

FractionalSolution solve_lp(const LpModel& model) { return solve_lp_impl(model, nullptr); }

FractionalSolution solve_lp(const LpModel& model, const std::vector<double>& costs) {
    if (costs.size() != model.num_variables())
        throw input_error("cost vector size " + std::to_string(costs.size()) +
                          " does not match " + std::to_string(model.num_variables()) +
                          " variables");
    return solve_lp_impl(model, &costs);
}

DecompositionBound decomposition_lower_bound(const Graph& g, const Separation& sep) {
    auto [lp2, lp3] = build_separation_lps(g, sep);
    FractionalSolution m_sol = solve_lp(lp2);
    if (m_sol.status != SolveStatus::Optimal)
        throw input_error("LP2 solve failed: " + m_sol.diagnostic);
    FractionalSolution n_sol = solve_lp(lp3);
    if (n_sol.status != SolveStatus::Optimal)
        throw input_error("LP3 solve failed: " + n_sol.diagnostic);
    DecompositionBound bound;
    bound.m_star = m_sol.objective;
    bound.n_star = n_sol.objective;
    bound.lp3_solution = std::move(n_sol);
    return bound;
}

void dump_model(const LpModel& model, std::ostream& out) {
    for (std::size_t i = 0; i < model.rows.size(); ++i) {
        out << model.constraint_vertices[i];
        for (std::size_t idx : model.rows[i]) out << ' ' << model.variable_vertices[idx];
        out << '\n';
    }
}

}  // namespace mds
