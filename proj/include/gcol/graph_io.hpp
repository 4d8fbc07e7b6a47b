#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gcol/graph.hpp"

namespace gcol {

/// Decodes one graph6 string. A leading ">>graph6<<" header and trailing
/// line terminators are accepted; anything else beyond the encoded bits is
/// rejected as trailing garbage.
Graph parse_graph6(std::string_view text);
std::string serialize_graph6(const Graph& g);

/// One graph per non-empty line; header lines are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// DIMACS .col: "c" comments, one "p edge n m" line, "e u v" lines (1-indexed).
Graph parse_dimacs(std::string_view text);
std::string serialize_dimacs(const Graph& g);

/// One "u v" pair per line, 0-indexed. The order is one more than the largest
/// endpoint unless `order` is given; '#' starts a comment.
Graph parse_edge_list(std::string_view text, int order = -1);
std::string serialize_edge_list(const Graph& g);

enum class GraphFormat { Graph6, Dimacs, Edges };

GraphFormat parse_format_name(std::string_view name);
Graph parse_graph(std::string_view text, GraphFormat format);

}  // namespace gcol
