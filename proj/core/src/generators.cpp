#include "mds/generators.hpp"

#include <random>

namespace mds {

std::string FamilyParams::name() const {
    switch (family) {
        case Family::Hypercube: return "hypercube(d=" + std::to_string(d) + ")";
        case Family::Queens: return "queens(k=" + std::to_string(k) + ")";
        case Family::KTree:
            return "ktree(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
        case Family::TrapStars: return "trap-stars(p=" + std::to_string(p) + ")";
        case Family::TrapClique: return "trap-clique(p=" + std::to_string(p) + ")";
    }
    return "?";
}

Graph hypercube(int d) {
    if (d < 1) throw input_error("hypercube dimension must be >= 1");
    if (d >= 31) throw input_error("hypercube dimension " + std::to_string(d) + " overflows vertex count");
    const std::size_t n = std::size_t{1} << d;
    std::vector<Edge> edges;
    edges.reserve(n * d / 2);
    for (Vertex v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b) {
            Vertex u = v ^ (Vertex{1} << b);
            if (v < u) edges.emplace_back(v, u);
        }
    return build_graph(n, edges);
}

Graph queens(int k) {
    if (k < 1) throw input_error("queens board side must be >= 1");
    const std::size_t n = std::size_t(k) * k;
    auto id = [&](int r, int c) { return static_cast<Vertex>(r * k + c); };
    std::vector<Edge> edges;
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) {
            // four forward directions cover each line segment once
            constexpr int dr[] = {0, 1, 1, 1};
            constexpr int dc[] = {1, 0, 1, -1};
            for (int dir = 0; dir < 4; ++dir)
                for (int r2 = r + dr[dir], c2 = c + dc[dir]; r2 >= 0 && r2 < k && c2 >= 0 && c2 < k;
                     r2 += dr[dir], c2 += dc[dir])
                    edges.emplace_back(id(r, c), id(r2, c2));
        }
    return build_graph(n, edges);
}

Graph random_ktree(std::size_t n, int k, std::uint64_t seed) {
    if (k < 1) throw input_error("k-tree parameter must be >= 1");
    if (n < std::size_t(k) + 1)
        throw input_error("k-tree needs n >= k+1 (got n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> cliques;  // all materialized k-cliques

    // base (k+1)-clique and its k-subsets
    for (Vertex u = 0; u + 1 <= static_cast<Vertex>(k); ++u)
        for (Vertex v = u + 1; v <= static_cast<Vertex>(k); ++v) edges.emplace_back(u, v);
    for (Vertex skip = 0; skip <= static_cast<Vertex>(k); ++skip) {
        std::vector<Vertex> q;
        for (Vertex u = 0; u <= static_cast<Vertex>(k); ++u)
            if (u != skip) q.push_back(u);
        cliques.push_back(std::move(q));
    }

    for (Vertex v = static_cast<Vertex>(k) + 1; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, cliques.size() - 1);
        const std::vector<Vertex> q = cliques[pick(rng)];
        for (Vertex u : q) edges.emplace_back(u, v);
        // k-subsets of q + v become new k-cliques
        for (std::size_t skip = 0; skip < q.size(); ++skip) {
            std::vector<Vertex> nq;
            for (std::size_t i = 0; i < q.size(); ++i)
                if (i != skip) nq.push_back(q[i]);
            nq.push_back(v);
            cliques.push_back(std::move(nq));
        }
    }
    return build_graph(n, edges);
}

Graph trap_stars(int p) {
    if (p < 2) throw input_error("trap-stars requires p >= 2");
    const std::size_t n = std::size_t{1} << (p + 1);
    const Vertex t1 = static_cast<Vertex>(n - 2), t2 = static_cast<Vertex>(n - 1);
    std::vector<Edge> edges;
    Vertex base = 0;
    for (int i = 1; i <= p; ++i) {
        const Vertex size = Vertex{1} << i, half = size / 2;
        const Vertex root = base;
        for (Vertex leaf = base + 1; leaf < base + size; ++leaf) edges.emplace_back(root, leaf);
        for (Vertex v = base; v < base + half; ++v) edges.emplace_back(t1, v);
        for (Vertex v = base + half; v < base + size; ++v) edges.emplace_back(t2, v);
        base += size;
    }
    return build_graph(n, edges);
}

Graph trap_clique(int p) {
    if (p < 2) throw input_error("trap-clique requires p >= 2");
    const std::size_t n_blocks = (std::size_t{1} << (p + 1)) - 2;
    const std::size_t n = n_blocks + p + 2;
    std::vector<Vertex> s(p);
    for (int i = 0; i < p; ++i) s[i] = static_cast<Vertex>(n_blocks + i);
    const Vertex t1 = static_cast<Vertex>(n - 2), t2 = static_cast<Vertex>(n - 1);
    std::vector<Edge> edges;
    // V1 = {s_1..s_p, t_1, t_2} is a clique
    std::vector<Vertex> v1 = s;
    v1.push_back(t1);
    v1.push_back(t2);
    for (std::size_t i = 0; i < v1.size(); ++i)
        for (std::size_t j = i + 1; j < v1.size(); ++j) edges.emplace_back(v1[i], v1[j]);
    Vertex base = 0;
    for (int i = 1; i <= p; ++i) {
        const Vertex size = Vertex{1} << i, half = size / 2;
        for (Vertex v = base; v < base + size; ++v) edges.emplace_back(s[i - 1], v);
        for (Vertex v = base; v < base + half; ++v) edges.emplace_back(t1, v);
        for (Vertex v = base + half; v < base + size; ++v) edges.emplace_back(t2, v);
        base += size;
    }
    return build_graph(n, edges);
}

Graph generate(const FamilyParams& params) {
    switch (params.family) {
        case FamilyParams::Family::Hypercube: return hypercube(params.d);
        case FamilyParams::Family::Queens: return queens(params.k);
        case FamilyParams::Family::KTree: return random_ktree(params.n, params.k, params.seed);
        case FamilyParams::Family::TrapStars: return trap_stars(params.p);
        case FamilyParams::Family::TrapClique: return trap_clique(params.p);
    }
    throw input_error("unknown family");
}

VertexSet trap_dominators(const Graph& g) {
    VertexSet s(g.num_vertices());
    s.insert(static_cast<Vertex>(g.num_vertices() - 2));
    s.insert(static_cast<Vertex>(g.num_vertices() - 1));
    return s;
}

}  // namespace mds
