#pragma once

#include <string>
#include <vector>

#include "gcol/graph.hpp"
#include "gcol/oracles.hpp"
#include "gcol/transversal.hpp"

namespace gcol {

struct StrongColoringResult {
    /// Colouring of the padded graph; padding vertices follow the originals.
    Coloring padded;
    Graph padded_graph;
    VertexPartition padded_partition;
    /// Restriction to the original vertices.
    Coloring coloring;
    int repairs = 0;
    /// One JSON object per repair when tracing was requested.
    std::vector<std::string> trace;
};

/// Blocks of p are filled to size r with isolated vertices (round-robin over
/// the blocks still short), coloured bijectively, and the edges of g are
/// inserted in lexicographic order with a transversal swap after every
/// conflict. Throws HypothesisError when r < 3*Delta(g), InvalidArgument
/// when a block exceeds r, FalsificationError if a repair fails.
StrongColoringResult strong_color(const Graph& g, const VertexPartition& p, int r, bool trace = false);

/// Proper on g, colours in 1..r, and no colour repeated inside a block, so
/// every block padded to r vertices can see all r colours.
bool verify_strong_coloring(const Graph& g, const VertexPartition& p, int r, const Coloring& c);

}  // namespace gcol
