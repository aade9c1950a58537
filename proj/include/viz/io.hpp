#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "viz/graph.hpp"

namespace viz {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// graph6: n <= 62 uses the one-byte header n+63; 63 <= n <= 258047 uses
// '~' followed by three bytes of the 18-bit order. Payload bytes carry the
// upper triangle in column order, 6 bits per byte offset by 63, unused
// trailing bits zero.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

// Edge list: first line "n", then "u v" lines with 0 <= u,v < n, u != v.
// Duplicates (either orientation) are deduplicated.
Graph parse_edgelist(std::string_view text);
std::string emit_edgelist(const Graph& g);

// One graph6 line per graph; blank lines ignored. Parse failures report the
// 1-based line number.
std::vector<Graph> parse_graph6_file(std::string_view text);

// Auto-detect by extension (.g6 -> graph6 first line, .el -> edge list);
// format override: "g6", "el" or "" for auto.
Graph load_graph_file(const std::string& path, const std::string& format = "");

}  // namespace viz
