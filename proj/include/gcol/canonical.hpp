#pragma once

#include <string>
#include <vector>

#include "gcol/graph.hpp"

namespace gcol {

/// Relabeling new_label[v] that sends g to its canonical form. Computed by
/// individualization-refinement over every leaf of the search tree, keeping
/// the lexicographically largest adjacency code. No automorphism pruning, so
/// the cost grows with the automorphism group; fine at desk scale.
std::vector<Vertex> canonical_labeling(const Graph& g);

Graph relabel(const Graph& g, const std::vector<Vertex>& new_label);
Graph canonical_form(const Graph& g);
/// graph6 string of the canonical form; equal strings iff isomorphic graphs.
std::string canonical_graph6(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace gcol
