#ifndef SKEWRANK_GRAPH_IO_HPP
#define SKEWRANK_GRAPH_IO_HPP

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "skewrank/graph.hpp"

namespace skewrank {

// Text format: '#' starts a comment, blank lines are skipped, the first data
// line is the vertex count n, every further data line is "u v" = arc u->v
// with 0 <= u,v < n, at most one line per unordered pair.
struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& what, int line_no)
        : std::runtime_error(what + " at line " + std::to_string(line_no)), line(line_no) {}
};

namespace detail {

inline std::vector<std::string_view> data_tokens(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

inline bool parse_int(std::string_view tok, int& out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace detail

inline OrientedGraph parse_graph_file(std::string_view text) {
    int n = -1;
    std::vector<Arc> arcs;
    std::vector<Edge> seen;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        auto tokens = detail::data_tokens(line);
        if (tokens.empty()) {
            if (end == text.size()) break;
            continue;
        }
        if (n < 0) {
            int value;
            if (tokens.size() != 1 || !detail::parse_int(tokens[0], value))
                throw ParseError("expected vertex count", line_no);
            if (value < 0) throw ParseError("negative vertex count", line_no);
            n = value;
            continue;
        }
        int u, v;
        if (tokens.size() != 2 || !detail::parse_int(tokens[0], u) ||
            !detail::parse_int(tokens[1], v))
            throw ParseError("malformed arc line", line_no);
        if (u == v) throw ParseError("self-loop", line_no);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("vertex id out of range", line_no);
        Edge e = normalize_edge(u, v);
        for (const Edge& s : seen)
            if (s == e) throw ParseError("duplicate edge", line_no);
        seen.push_back(e);
        arcs.push_back({u, v});
        if (end == text.size()) break;
    }
    if (n < 0) throw ParseError("expected vertex count", line_no);
    return OrientedGraph(n, arcs);
}

/// Canonical form: vertex count, then one arc per line ordered by the
/// normalized (min,max) endpoint pair. parse(serialize(x)) == x, and
/// serialize(parse(t)) == t for canonically formatted t.
inline std::string serialize_graph_file(const OrientedGraph& og) {
    std::string out = std::to_string(og.vertex_count());
    out += '\n';
    for (auto [u, v] : og.arcs()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

/// Orientation-free serialization: every edge written low-endpoint first.
inline std::string serialize_graph_file(const Graph& g) {
    std::string out = std::to_string(g.vertex_count());
    out += '\n';
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

}  // namespace skewrank

#endif  // SKEWRANK_GRAPH_IO_HPP
