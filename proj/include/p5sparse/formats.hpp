#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "p5sparse/graph.hpp"

namespace p5sparse {

/// Largest order representable with the single-byte graph6 size header.
inline constexpr int kGraph6MaxOrder = 62;

/// Standard graph6 (short form only).
std::string encode_graph6(const Graph& g);

/// Inverse of encode_graph6. A trailing '\n' or "\r\n" is accepted; anything
/// else outside the exact encoding (long-form header, wrong length, bytes
/// outside 63..126, nonzero padding bits) throws InvalidInput.
Graph decode_graph6(std::string_view text);

/// "n m" on the first line, then m lines "u v" (0-indexed).
std::string encode_edge_list(const Graph& g);
Graph decode_edge_list(std::string_view text);

/// Undirected DOT with vertex ids as labels.
std::string encode_dot(const Graph& g, std::string_view name = "G");

enum class InputFormat { Auto, Graph6, EdgeList };

/// Parses one or more graphs. Graph6 input is one graph per non-empty line;
/// an edge list is a single graph. Auto picks edge list when the first
/// non-blank character is a digit (never valid as a graph6 header).
std::vector<Graph> parse_graphs(std::string_view text, InputFormat format = InputFormat::Auto);

}  // namespace p5sparse
