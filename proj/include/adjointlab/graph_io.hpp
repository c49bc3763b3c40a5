#pragma once

#include <string>
#include <string_view>

#include "adjointlab/graph.hpp"

namespace adjointlab {

// Edge-list text: '#' comment lines and blank lines are skipped; the first
// remaining line is "n m", followed by exactly m lines "u v" (1-based).
// Errors raise ParseError carrying the offending line number.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// Standard graph6 encoding for 1 <= n <= 62. An optional ">>graph6<<"
// header and trailing newline are accepted on input; padding bits must be
// zero so that parse and emit are mutually inverse.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

enum class GraphFormat { automatic, edge_list, graph6 };

GraphFormat parse_format_name(const std::string& name);

// Automatic detection uses the extension (.g6 / .el), then falls back to
// sniffing the first non-comment line (edge lists contain whitespace).
Graph parse_graph_text(std::string_view text, GraphFormat format);
Graph read_graph_file(const std::string& path, GraphFormat format = GraphFormat::automatic);

}  // namespace adjointlab
