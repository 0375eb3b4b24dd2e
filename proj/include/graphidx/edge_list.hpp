#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "graphidx/graph.hpp"
#include "graphidx/io.hpp"

namespace graphidx {

/// Reads the text edge-list format: a header line `n m`, then `m` lines
/// `i j` with zero-based endpoints. Blank lines and lines starting with `#`
/// are skipped. Duplicate and reversed edges are tolerated; loops are not.
inline Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, out)) {
            ++line_no;
            auto first = out.find_first_not_of(" \t\r");
            if (first == std::string::npos || out[first] == '#') continue;
            return true;
        }
        return false;
    };
    auto parse_pair = [&](const std::string& text, long long& a, long long& b) {
        std::istringstream ss(text);
        std::string rest;
        if (!(ss >> a >> b) || (ss >> rest)) {
            throw ParseError(line_no, "expected two integers, got '" + text + "'");
        }
        if (a < 0 || b < 0) throw ParseError(line_no, "negative value in '" + text + "'");
    };

    if (!next_line(line)) throw ParseError(line_no + 1, "missing header line 'n m'");
    long long n = 0, m = 0;
    parse_pair(line, n, m);

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long e = 0; e < m; ++e) {
        if (!next_line(line)) {
            throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(e));
        }
        long long u = 0, v = 0;
        parse_pair(line, u, v);
        if (u >= n || v >= n) throw ParseError(line_no, "endpoint out of range in '" + line + "'");
        if (u == v) throw ParseError(line_no, "self-loop in '" + line + "'");
        edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
    if (next_line(line)) throw ParseError(line_no, "unexpected trailing content '" + line + "'");
    return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.node_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    if (!out) throw Error("failed writing edge list");
}

inline Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return read_edge_list(in);
}

inline void save_edge_list(const std::string& path, const Graph& g) {
    write_file_atomically(path, [&](std::ostream& out) { write_edge_list(out, g); });
}

}  // namespace graphidx
