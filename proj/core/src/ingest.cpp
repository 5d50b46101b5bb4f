#include "mds/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace mds {

GraphFormat parse_format(const std::string& name) {
    if (name == "edge-list") return GraphFormat::EdgeList;
    if (name == "metis") return GraphFormat::Metis;
    if (name == "snap" || name == "snap-edge-list") return GraphFormat::SnapEdgeList;
    throw input_error("unknown graph format '" + name + "' (expected edge-list, metis or snap)");
}

std::string format_name(GraphFormat f) {
    switch (f) {
        case GraphFormat::EdgeList: return "edge-list";
        case GraphFormat::Metis: return "metis";
        case GraphFormat::SnapEdgeList: return "snap-edge-list";
    }
    return "?";
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

std::size_t parse_uint(const std::string& tok, std::size_t lineno) {
    std::size_t value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        throw parse_error(lineno, "expected a nonnegative integer, got '" + tok + "'");
    return value;
}

Graph read_edge_list(std::istream& in, bool snap_comments, IngestStats* stats) {
    std::unordered_map<std::string, Vertex> remap;
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    std::string line;
    std::size_t lineno = 0;
    bool all_numeric = true;
    auto id_of = [&](const std::string& label) {
        auto [it, fresh] = remap.emplace(label, static_cast<Vertex>(labels.size()));
        if (fresh) {
            labels.push_back(label);
            std::size_t value = 0;
            auto [p, ec] = std::from_chars(label.data(), label.data() + label.size(), value);
            all_numeric = all_numeric && ec == std::errc{} && p == label.data() + label.size();
        }
        return it->second;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (snap_comments && !line.empty() && line[0] == '#') continue;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks.size() != 2)
            throw parse_error(lineno, "expected two endpoint tokens, got " + std::to_string(toks.size()));
        Vertex u = id_of(toks[0]);  // sequenced: first token claims the next id
        Vertex v = id_of(toks[1]);
        edges.emplace_back(u, v);
    }
    if (all_numeric && !labels.empty()) {
        // purely numeric files remap in numeric order so canonical output
        // reads back as the identical graph
        std::vector<Vertex> order(labels.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Vertex>(i);
        auto value_of = [&](Vertex i) {
            std::size_t v = 0;
            std::from_chars(labels[i].data(), labels[i].data() + labels[i].size(), v);
            return v;
        };
        std::sort(order.begin(), order.end(),
                  [&](Vertex a, Vertex b) { return value_of(a) < value_of(b); });
        std::vector<Vertex> new_id(labels.size());
        std::vector<std::string> sorted_labels(labels.size());
        for (std::size_t pos = 0; pos < order.size(); ++pos) {
            new_id[order[pos]] = static_cast<Vertex>(pos);
            sorted_labels[pos] = labels[order[pos]];
        }
        for (auto& [u, v] : edges) {
            u = new_id[u];
            v = new_id[v];
        }
        labels = std::move(sorted_labels);
    }
    BuildStats bs;
    Graph g = build_graph(labels.size(), edges, &bs);
    if (stats) {
        stats->self_loops_dropped = bs.self_loops_dropped;
        stats->duplicate_edges_dropped = bs.duplicate_edges_dropped;
        stats->labels = std::move(labels);
    }
    return g;
}

Graph read_metis(std::istream& in, IngestStats* stats) {
    std::string line;
    std::size_t lineno = 0;
    // header: n m [fmt]
    std::size_t n = 0, m_declared = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '%') continue;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks.size() < 2 || toks.size() > 3)
            throw parse_error(lineno, "malformed METIS header (expected 'n m [fmt]')");
        n = parse_uint(toks[0], lineno);
        m_declared = parse_uint(toks[1], lineno);
        if (toks.size() == 3 && parse_uint(toks[2], lineno) != 0)
            throw parse_error(lineno, "weighted METIS format flag '" + toks[2] + "' is not supported");
        have_header = true;
        break;
    }
    if (!have_header) throw parse_error(lineno == 0 ? 1 : lineno, "missing METIS header");

    std::vector<Edge> edges;
    std::size_t vertex = 0;
    while (vertex < n && std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '%') continue;
        for (const auto& tok : tokens_of(line)) {
            std::size_t nb = parse_uint(tok, lineno);
            if (nb < 1 || nb > n)
                throw parse_error(lineno, "neighbor id " + tok + " out of range 1.." + std::to_string(n));
            edges.emplace_back(static_cast<Vertex>(vertex), static_cast<Vertex>(nb - 1));
        }
        ++vertex;
    }
    if (vertex < n)
        throw parse_error(lineno + 1, "truncated METIS file: expected " + std::to_string(n) +
                                          " adjacency lines, got " + std::to_string(vertex));
    BuildStats bs;
    Graph g = build_graph(n, edges, &bs);
    if (g.num_edges() != m_declared && m_declared != 0 && g.num_edges() != 0) {
        // Header edge counts in the wild are unreliable; normalize silently.
    }
    if (stats) {
        stats->self_loops_dropped = bs.self_loops_dropped;
        // METIS lists each edge from both endpoints; those pairs are not duplicates.
        stats->duplicate_edges_dropped =
            bs.duplicate_edges_dropped > g.num_edges() ? bs.duplicate_edges_dropped - g.num_edges() : 0;
    }
    return g;
}

}  // namespace

Graph read_graph(std::istream& in, GraphFormat format, IngestStats* stats) {
    switch (format) {
        case GraphFormat::EdgeList: return read_edge_list(in, false, stats);
        case GraphFormat::SnapEdgeList: return read_edge_list(in, true, stats);
        case GraphFormat::Metis: return read_metis(in, stats);
    }
    throw input_error("unreachable format");
}

void write_graph(const Graph& g, std::ostream& out, GraphFormat format) {
    if (format == GraphFormat::EdgeList || format == GraphFormat::SnapEdgeList) {
        for (const auto& [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
    } else if (format == GraphFormat::Metis) {
        out << g.num_vertices() << ' ' << g.num_edges() << '\n';
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            bool first = true;
            for (Vertex u : g.neighbors(v)) {
                if (!first) out << ' ';
                out << (u + 1);
                first = false;
            }
            out << '\n';
        }
    }
    if (!out) throw input_error("graph write failed");
}

Graph read_graph_file(const std::string& path, GraphFormat format, IngestStats* stats) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "' for reading");
    return read_graph(in, format, stats);
}

void write_graph_file(const Graph& g, const std::string& path, GraphFormat format) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open '" + path + "' for writing");
    write_graph(g, out, format);
}

}  // namespace mds
