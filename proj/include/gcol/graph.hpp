#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "gcol/rational.hpp"
#include "gcol/vertex_set.hpp"

namespace gcol {

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    constexpr bool operator==(const Edge&) const = default;
    constexpr auto operator<=>(const Edge&) const = default;
};

using EdgeList = std::vector<Edge>;

/// Finite simple graph on vertices 0..n-1 with a dense symmetric adjacency.
class Graph {
public:
    static constexpr int kMaxOrder = VertexSet::kCapacity;

    Graph() = default;
    explicit Graph(int n);

    /// Throws InvalidArgument on loops, duplicates or out-of-range endpoints.
    static Graph from_edges(int n, const EdgeList& edges);

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return size_; }
    VertexSet vertices() const { return VertexSet::range(order()); }

    bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    VertexSet neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return adj_[v].size(); }

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    /// Edges (u < v) in lexicographic order.
    EdgeList edges() const;

    int max_degree() const;
    int min_degree() const;
    bool is_regular() const;

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    void check_vertex(Vertex v) const;

    std::vector<VertexSet> adj_;
    int size_ = 0;
};

/// Induced subgraph together with the map from its vertex indices back to
/// the parent graph.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;

    VertexSet parent_set(VertexSet local) const;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);
InducedSubgraph neighborhood_graph(const Graph& g, Vertex v);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
/// Disjoint union plus every edge between a and b; a's vertices come first.
Graph join(const Graph& a, const Graph& b);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph petersen_graph();
/// C_cycle_len with each vertex replaced by K_clique_size and consecutive
/// blobs completely joined.
Graph blowup_cycle(int cycle_len, int clique_size);

/// 2|E|/|V| exactly. Throws InvalidArgument on the empty graph.
Rational average_degree(const Graph& g);

bool is_clique(const Graph& g, VertexSet s);
bool is_independent(const Graph& g, VertexSet s);
int edges_within(const Graph& g, VertexSet s);

/// Vertex set of the component of g[within] containing start.
VertexSet component_of(const Graph& g, Vertex start, VertexSet within);
std::vector<VertexSet> components(const Graph& g, VertexSet within);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

/// k-connectivity by enumerating every vertex subset of size < k as a
/// candidate separator. Exponential in k; meant for desk-scale graphs.
bool is_k_connected(const Graph& g, int k);
/// Largest k with is_k_connected(g, k); order-1 for complete graphs.
int vertex_connectivity(const Graph& g);
/// A smallest vertex set whose removal disconnects g (empty when g is
/// already disconnected); nullopt for complete graphs.
std::optional<VertexSet> minimum_separator(const Graph& g);

std::string to_string(const Graph& g);

}  // namespace gcol
