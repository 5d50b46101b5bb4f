#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "mds/graph.hpp"

namespace mds {

enum class GraphFormat { EdgeList, Metis, SnapEdgeList };

/// Parse failure with 1-based line number of the first offending line.
struct parse_error : input_error {
    parse_error(std::size_t ln, const std::string& what)
        : input_error("line " + std::to_string(ln) + ": " + what), line(ln) {}
    std::size_t line;
};

struct IngestStats {
    std::size_t self_loops_dropped = 0;
    std::size_t duplicate_edges_dropped = 0;
    /// Original label of each dense vertex id (edge-list formats only).
    std::vector<std::string> labels;
};

GraphFormat parse_format(const std::string& name);
std::string format_name(GraphFormat f);

/// Reads a graph. Edge-list labels are arbitrary tokens remapped densely in
/// first-appearance order; METIS ids are 1-based and converted to 0-based.
/// Input is normalized to a simple graph (dedupe + self-loop drop, counted
/// in stats).
Graph read_graph(std::istream& in, GraphFormat format, IngestStats* stats = nullptr);

/// Writes a graph re-readable by read_graph. Edge-list: one unordered edge
/// per line, endpoints ascending, lines sorted (isolated vertices are not
/// representable). METIS: header then 1-based neighbor lines.
void write_graph(const Graph& g, std::ostream& out, GraphFormat format);

Graph read_graph_file(const std::string& path, GraphFormat format, IngestStats* stats = nullptr);
void write_graph_file(const Graph& g, const std::string& path, GraphFormat format);

}  // namespace mds
