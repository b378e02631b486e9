#pragma once

#include <string>
#include <string_view>

#include "spantree/graph.hpp"

namespace spantree {

enum class GraphFormat { edge_list, graph6 };

// Edge-list text: first line "n m", then m lines "u v", 0-indexed.
SimpleGraph parse_edge_list(std::string_view text);
std::string to_edge_list(const SimpleGraph& g);

// Standard graph6 ASCII encoding, bit-exact; no trailing newline.
SimpleGraph parse_graph6(std::string_view line);
std::string to_graph6(const SimpleGraph& g);

SimpleGraph parse_graph(std::string_view text, GraphFormat format);

// Sniffs the format: edge-list lines start with a digit, graph6 bytes
// start at '?' (63) or above.
SimpleGraph parse_graph_auto(std::string_view text);

}  // namespace spantree
