#pragma once

#include <optional>
#include <vector>

#include "gcol/graph.hpp"

namespace gcol {

/// Vertex colouring with colours 1..num_colors; 0 marks an uncoloured vertex
/// (used for colourings of G - x stored against G's indices).
struct Coloring {
    std::vector<int> color;
    int num_colors = 0;

    int operator[](Vertex v) const { return color[v]; }
    /// Vertices with colour c.
    VertexSet color_class(int c) const;
    /// Distinct colours actually present.
    int colors_used() const;
};

/// Proper on the coloured vertices: no edge with both ends sharing a colour.
bool is_proper(const Graph& g, const Coloring& c);
/// Proper, every vertex coloured, every colour within 1..num_colors.
bool is_proper_total(const Graph& g, const Coloring& c);

struct OracleLimits {
    /// Largest order the exponential oracles accept.
    int max_exhaustive_order = 32;
};

struct ChromaticResult {
    int chi = 0;
    Coloring certificate;
};

/// DSATUR-ordered exact search: clique lower bound, greedy upper bound, then
/// the decision search for each r in between. Throws BoundExceeded.
ChromaticResult chromatic_number(const Graph& g, const OracleLimits& limits = {});
/// Plain enumeration of all r^n assignments for r = 1, 2, ...; the
/// independent cross-check for small graphs.
ChromaticResult chromatic_number_naive(const Graph& g);

/// An r-colouring extending `precolor` (entries 0 are free), or nullopt.
std::optional<Coloring> find_coloring(const Graph& g, int r,
                                      const std::vector<int>& precolor = {});

VertexSet maximum_clique(const Graph& g, VertexSet within);
VertexSet maximum_clique(const Graph& g);
int clique_number(const Graph& g);
/// Maximal cliques of g (Bron-Kerbosch with pivoting), each as a vertex set,
/// sorted.
std::vector<VertexSet> maximal_cliques(const Graph& g);
/// The maximal cliques having at least t vertices.
std::vector<VertexSet> maximal_cliques_at_least(const Graph& g, int t);

VertexSet maximum_independent_set(const Graph& g);
int independence_number(const Graph& g);

/// Order of a largest clique containing v.
int local_clique_number(const Graph& g, Vertex v);
std::vector<int> local_clique_numbers(const Graph& g);
/// max_v d(v) - omega(v), signed (the complete graph gives -1).
int rho(const Graph& g);

/// Induced subgraph H with chi(H) = chi(g) and chi(H - v) < chi(H) for all v,
/// found by deleting vertices in index order while chi is unchanged.
InducedSubgraph vertex_critical_subgraph(const Graph& g, const OracleLimits& limits = {});
bool is_vertex_critical(const Graph& g, const OracleLimits& limits = {});
/// chi(g - e) < chi(g). Throws InvalidArgument for a non-edge.
bool is_critical_edge(const Graph& g, Edge e, const OracleLimits& limits = {});

/// Component containing x of the subgraph induced by the colour classes of
/// x and y. Throws InvalidArgument when the colouring is improper or x, y
/// are uncoloured.
VertexSet kempe_component(const Graph& g, const Coloring& c, Vertex x, Vertex y);

/// Number of isolated vertices added before partitioning into r-sets.
int strong_padding(int order, int r);
/// Exhaustive: every partition of the padded vertex set into parts of size
/// r admits a proper colouring using all r colours on each part.
bool strong_chromatic_check(const Graph& g, int r, const OracleLimits& limits = {});

struct InvariantReport {
    int order = 0;
    int size = 0;
    int chi = 0;
    int omega = 0;
    int alpha = 0;
    int delta_max = 0;
    int delta_min = 0;
    int rho = 0;
    std::vector<int> omega_v;
    Coloring chi_certificate;
};

InvariantReport invariant_report(const Graph& g, const OracleLimits& limits = {});

}  // namespace gcol
