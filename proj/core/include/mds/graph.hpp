#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mds {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Raised on malformed user input (bad edges, bad parameters, bad files).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BuildStats {
    std::size_t self_loops_dropped = 0;
    std::size_t duplicate_edges_dropped = 0;
};

/// Immutable undirected simple graph in compressed (offsets + targets) form.
/// Neighbor lists are sorted ascending; vertex ids are 0..n-1.
class Graph {
public:
    Graph() = default;

    std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t num_edges() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    std::size_t max_degree() const;

    bool has_edge(Vertex u, Vertex v) const;

    /// Canonical edge list: endpoints ascending within each pair, pairs sorted.
    std::vector<Edge> edge_list() const;

    friend Graph build_graph(std::size_t n, std::span<const Edge> edges, BuildStats* stats);
    friend bool operator==(const Graph&, const Graph&);

private:
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> targets_;
    std::size_t m_ = 0;
};

bool operator==(const Graph& a, const Graph& b);

/// Builds a simple graph: self-loops dropped, duplicate edges collapsed.
/// Throws input_error if an endpoint is out of range.
Graph build_graph(std::size_t n, std::span<const Edge> edges, BuildStats* stats = nullptr);

/// Vertex subset over a fixed universe 0..n-1 with O(1) membership.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : in_(universe, 0) {}
    VertexSet(std::size_t universe, std::initializer_list<Vertex> vs) : VertexSet(universe) {
        for (Vertex v : vs) insert(v);
    }

    std::size_t universe() const { return in_.size(); }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Vertex v) const { return in_[v] != 0; }

    void insert(Vertex v) {
        if (v >= in_.size()) throw input_error("vertex " + std::to_string(v) + " outside universe");
        if (!in_[v]) {
            in_[v] = 1;
            members_.push_back(v);
        }
    }

    /// Members in insertion order.
    const std::vector<Vertex>& members() const { return members_; }
    /// Members ascending.
    std::vector<Vertex> sorted() const;

private:
    std::vector<char> in_;
    std::vector<Vertex> members_;
};

/// True iff every vertex is in s or adjacent to a member of s.
bool is_dominating(const Graph& g, const VertexSet& s);

/// N(S) \ S: vertices outside s with at least one neighbor in s.
VertexSet open_neighborhood_of_set(const Graph& g, const VertexSet& s);

struct DominatingSetResult {
    VertexSet set;
    std::string algorithm;
    double elapsed_seconds = 0.0;
    std::size_t size() const { return set.size(); }
};

}  // namespace mds
