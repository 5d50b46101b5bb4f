#include "mds/graph.hpp"

#include <algorithm>

namespace mds {

std::size_t Graph::max_degree() const {
    std::size_t d = 0;
    for (std::size_t v = 0; v + 1 < offsets_.size(); ++v)
        d = std::max(d, offsets_[v + 1] - offsets_[v]);
    return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edge_list() const {
    std::vector<Edge> edges;
    edges.reserve(m_);
    for (Vertex u = 0; u < num_vertices(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) edges.emplace_back(u, v);
    return edges;  // already sorted: u ascending, neighbor lists ascending
}

bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges, BuildStats* stats) {
    BuildStats local;
    std::vector<std::pair<Vertex, Vertex>> dir;
    dir.reserve(edges.size() * 2);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw input_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
        if (u == v) {
            ++local.self_loops_dropped;
            continue;
        }
        dir.emplace_back(u, v);
        dir.emplace_back(v, u);
    }
    std::sort(dir.begin(), dir.end());
    auto last = std::unique(dir.begin(), dir.end());
    local.duplicate_edges_dropped = (dir.end() - last) / 2;
    dir.erase(last, dir.end());

    Graph g;
    g.offsets_.assign(n + 1, 0);
    g.targets_.reserve(dir.size());
    for (const auto& [u, v] : dir) ++g.offsets_[u + 1];
    for (std::size_t i = 1; i <= n; ++i) g.offsets_[i] += g.offsets_[i - 1];
    for (const auto& [u, v] : dir) g.targets_.push_back(v);
    g.m_ = dir.size() / 2;
    if (stats) *stats = local;
    return g;
}

std::vector<Vertex> VertexSet::sorted() const {
    std::vector<Vertex> out = members_;
    std::sort(out.begin(), out.end());
    return out;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
    const std::size_t n = g.num_vertices();
    std::vector<char> covered(n, 0);
    for (Vertex v : s.members()) {
        covered[v] = 1;
        for (Vertex u : g.neighbors(v)) covered[u] = 1;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

VertexSet open_neighborhood_of_set(const Graph& g, const VertexSet& s) {
    VertexSet out(g.num_vertices());
    for (Vertex v : s.members())
        for (Vertex u : g.neighbors(v))
            if (!s.contains(u)) out.insert(u);
    return out;
}

}  // namespace mds
