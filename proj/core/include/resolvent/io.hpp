#pragma once

#include <string>
#include <string_view>

#include "resolvent/graph.hpp"

namespace resolvent {

/// Edge-list text: first non-comment line "n m", then m lines "u v" with
/// 0-based indices. Lines whose first non-blank character is '#' and blank
/// lines are ignored. Throws ParseError carrying the 1-based line number.
Graph parse_graph(std::string_view text);

/// Canonical edge list: header, then edges (u < v) in lexicographic order.
std::string serialize_graph(const Graph& g);

/// `graph { u -- v; }`, one edge per line; isolated vertices listed alone.
std::string export_dot(const Graph& g);

}  // namespace resolvent
