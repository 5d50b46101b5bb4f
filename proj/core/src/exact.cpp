#include "mds/exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>

namespace mds {

namespace {

using Mask = std::uint64_t;

struct Search {
    const Graph& g;
    std::vector<Mask> closed;  // closed-neighborhood masks
    Mask full = 0;
    std::size_t cover_cap = 1;  // Δ+1, the most one vertex can dominate
    std::chrono::steady_clock::time_point deadline;
    bool timed_out = false;
    std::size_t node_counter = 0;

    std::vector<Vertex> chosen;
    std::vector<Vertex> best;       // sorted
    std::size_t best_size;

    explicit Search(const Graph& graph) : g(graph), best_size(graph.num_vertices() + 1) {}

    void consider_candidate() {
        std::vector<Vertex> sorted_chosen = chosen;
        std::sort(sorted_chosen.begin(), sorted_chosen.end());
        if (chosen.size() < best_size ||
            (chosen.size() == best_size && sorted_chosen < best)) {
            best = std::move(sorted_chosen);
            best_size = chosen.size();
        }
    }

    void dfs(Mask dominated) {
        if ((++node_counter & 0x3ff) == 0 &&
            std::chrono::steady_clock::now() > deadline) {
            timed_out = true;
            return;
        }
        if (dominated == full) {
            consider_candidate();
            return;
        }
        const Mask undominated = full & ~dominated;
        const std::size_t lb =
            (static_cast<std::size_t>(std::popcount(undominated)) + cover_cap - 1) / cover_cap;
        if (chosen.size() + lb > best_size) return;

        // every dominating set hits the closed neighborhood of the lowest
        // undominated vertex
        const Vertex v = static_cast<Vertex>(std::countr_zero(undominated));
        std::vector<Vertex> candidates{v};
        for (Vertex u : g.neighbors(v)) candidates.push_back(u);
        std::sort(candidates.begin(), candidates.end());
        for (Vertex u : candidates) {
            chosen.push_back(u);
            dfs(dominated | closed[u]);
            chosen.pop_back();
            if (timed_out) return;
        }
    }
};

}  // namespace

ExactResult exact_gamma(const Graph& g, const OracleLimits& limits,
                        std::optional<double> lp_lower_bound) {
    const std::size_t n = g.num_vertices();
    if (n > limits.max_vertices || n > 64)
        throw input_error("exact oracle refuses n=" + std::to_string(n) + " (cap " +
                          std::to_string(std::min<std::size_t>(limits.max_vertices, 64)) + ")");
    ExactResult out;
    out.set = VertexSet(n);
    if (n == 0) return out;

    Search search(g);
    search.closed.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        Mask m = Mask{1} << v;
        for (Vertex u : g.neighbors(v)) m |= Mask{1} << u;
        search.closed[v] = m;
    }
    search.full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    search.cover_cap = g.max_degree() + 1;
    search.deadline = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(limits.time_budget_seconds));
    search.dfs(0);

    // the ceil(L*) bound certifies optimality early but never changes the set
    if (lp_lower_bound && !search.timed_out &&
        search.best_size < std::ceil(*lp_lower_bound - 1e-9))
        throw input_error("exact search found a set below ceil(L*): internal error");

    out.size = search.best_size;
    out.complete = !search.timed_out;
    for (Vertex v : search.best) out.set.insert(v);
    return out;
}

}  // namespace mds
