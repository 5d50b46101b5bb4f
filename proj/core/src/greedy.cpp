#include "mds/greedy.hpp"

#include <chrono>
#include <queue>

namespace mds {

TiePolicy parse_tie_policy(const std::string& name) {
    if (name == "min-id") return TiePolicy::MinId;
    if (name == "max-id") return TiePolicy::MaxId;
    throw input_error("unknown tie policy '" + name + "' (expected min-id or max-id)");
}

std::string tie_policy_name(TiePolicy t) {
    return t == TiePolicy::MinId ? "min-id" : "max-id";
}

DominatingSetResult GreedyResult::as_result() const {
    return {set, "greedy(" + tie_policy_name(tie) + ")", elapsed_seconds};
}

GreedyResult greedy_dominating_set(const Graph& g, TiePolicy tie) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = g.num_vertices();

    // gain[v] = |uncovered ∩ N[v]|, maintained eagerly; the queue holds
    // possibly stale entries and re-inserts on mismatch. Every re-insert
    // follows a strict gain decrease, so total queue work is O((n+m) log n).
    std::vector<std::size_t> gain(n);
    std::vector<char> covered(n, 0), selected(n, 0);
    for (Vertex v = 0; v < n; ++v) gain[v] = g.degree(v) + 1;

    struct Entry {
        std::size_t gain;
        Vertex v;
    };
    auto better = [tie](const Entry& a, const Entry& b) {
        if (a.gain != b.gain) return a.gain > b.gain;
        return tie == TiePolicy::MinId ? a.v < b.v : a.v > b.v;
    };
    auto worse = [better](const Entry& a, const Entry& b) { return better(b, a); };
    std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> queue(worse);
    for (Vertex v = 0; v < n; ++v) queue.push({gain[v], v});

    GreedyResult result;
    result.tie = tie;
    result.set = VertexSet(n);
    std::size_t uncovered = n;

    auto cover = [&](Vertex u) {
        if (covered[u]) return;
        covered[u] = 1;
        --uncovered;
        --gain[u];
        for (Vertex w : g.neighbors(u)) --gain[w];
    };

    while (uncovered > 0) {
        Entry top = queue.top();
        queue.pop();
        if (selected[top.v]) continue;
        if (top.gain != gain[top.v]) {
            queue.push({gain[top.v], top.v});
            continue;
        }
        selected[top.v] = 1;
        result.ordered_selection.push_back(top.v);
        result.gains.push_back(top.gain);
        result.set.insert(top.v);
        cover(top.v);
        for (Vertex u : g.neighbors(top.v)) cover(u);
    }

    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace mds
