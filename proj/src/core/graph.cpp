#include "gcol/graph.hpp"

#include <algorithm>
#include <sstream>

#include "gcol/error.hpp"

namespace gcol {

namespace {

// Calls fn(s) for every s subset of `pool` with |s| == k; stops when fn
// returns true. Returns whether it stopped early.
template <class Fn>
bool for_each_subset_of_size(const std::vector<Vertex>& pool, int k, Fn&& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    const int n = static_cast<int>(pool.size());
    if (k > n) return false;
    while (true) {
        VertexSet s;
        for (int i : idx) s.insert(pool[i]);
        if (fn(s)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::int64_t isqrt(std::int64_t x) {
    if (x < 0) throw InvalidArgument("isqrt of negative value");
    std::int64_t r = 0;
    std::int64_t bit = std::int64_t{1} << 62;
    while (bit > x) bit >>= 2;
    while (bit != 0) {
        if (x >= r + bit) {
            x -= r + bit;
            r = (r >> 1) + bit;
        } else {
            r >>= 1;
        }
        bit >>= 2;
    }
    return r;
}

Graph::Graph(int n) {
    if (n < 0 || n > kMaxOrder)
        throw InvalidArgument("graph order " + std::to_string(n) + " outside [0, " +
                              std::to_string(kMaxOrder) + "]");
    adj_.resize(n);
}

Graph Graph::from_edges(int n, const EdgeList& edges) {
    Graph g(n);
    for (const Edge& e : edges) {
        g.check_vertex(e.u);
        g.check_vertex(e.v);
        if (e.u == e.v) throw InvalidArgument("loop at vertex " + std::to_string(e.u));
        if (g.adjacent(e.u, e.v))
            throw InvalidArgument("duplicate edge " + std::to_string(e.u) + " " +
                                  std::to_string(e.v));
        g.add_edge(e.u, e.v);
    }
    return g;
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= order())
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range for order " +
                              std::to_string(order()));
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
    if (adj_[u].contains(v)) return;
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++size_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (!adj_[u].contains(v)) return;
    adj_[u].erase(v);
    adj_[v].erase(u);
    --size_;
}

EdgeList Graph::edges() const {
    EdgeList out;
    out.reserve(size_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[u])
            if (v > u) out.push_back({u, v});
    return out;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, a.size());
    return d;
}

int Graph::min_degree() const {
    if (adj_.empty()) return 0;
    int d = order();
    for (const auto& a : adj_) d = std::min(d, a.size());
    return d;
}

bool Graph::is_regular() const { return max_degree() == min_degree(); }

VertexSet InducedSubgraph::parent_set(VertexSet local) const {
    VertexSet out;
    for (Vertex v : local) out.insert(to_parent[v]);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
    if (!s.is_subset_of(g.vertices()))
        throw InvalidArgument("induced_subgraph: vertex set exceeds graph order");
    InducedSubgraph out;
    out.to_parent = s.to_vector();
    const int m = static_cast<int>(out.to_parent.size());
    std::vector<int> local(g.order(), -1);
    for (int i = 0; i < m; ++i) local[out.to_parent[i]] = i;
    out.graph = Graph(m);
    for (int i = 0; i < m; ++i)
        for (Vertex w : g.neighbors(out.to_parent[i]) & s)
            if (local[w] > i) out.graph.add_edge(i, local[w]);
    return out;
}

InducedSubgraph neighborhood_graph(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order())
        throw InvalidArgument("neighborhood_graph: vertex " + std::to_string(v) + " out of range");
    return induced_subgraph(g, g.neighbors(v));
}

Graph complement(const Graph& g) {
    Graph out(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph out(a.order() + b.order());
    for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
    for (const Edge& e : b.edges()) out.add_edge(e.u + a.order(), e.v + a.order());
    return out;
}

Graph join(const Graph& a, const Graph& b) {
    Graph out = disjoint_union(a, b);
    for (Vertex u = 0; u < a.order(); ++u)
        for (Vertex v = 0; v < b.order(); ++v) out.add_edge(u, a.order() + v);
    return out;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

Graph blowup_cycle(int cycle_len, int clique_size) {
    if (cycle_len < 3) throw InvalidArgument("blowup_cycle: cycle length must be at least 3");
    if (clique_size < 1) throw InvalidArgument("blowup_cycle: clique size must be at least 1");
    Graph g(cycle_len * clique_size);
    auto at = [&](int blob, int j) { return blob * clique_size + j; };
    for (int b = 0; b < cycle_len; ++b) {
        for (int i = 0; i < clique_size; ++i) {
            for (int j = i + 1; j < clique_size; ++j) g.add_edge(at(b, i), at(b, j));
            for (int j = 0; j < clique_size; ++j) g.add_edge(at(b, i), at((b + 1) % cycle_len, j));
        }
    }
    return g;
}

Rational average_degree(const Graph& g) {
    if (g.order() == 0) throw InvalidArgument("average degree of the empty graph");
    return Rational(2 * g.size(), g.order());
}

bool is_clique(const Graph& g, VertexSet s) {
    for (Vertex v : s)
        if (!(s - VertexSet::single(v)).is_subset_of(g.neighbors(v))) return false;
    return true;
}

bool is_independent(const Graph& g, VertexSet s) {
    for (Vertex v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

int edges_within(const Graph& g, VertexSet s) {
    int twice = 0;
    for (Vertex v : s) twice += (g.neighbors(v) & s).size();
    return twice / 2;
}

VertexSet component_of(const Graph& g, Vertex start, VertexSet within) {
    VertexSet seen = VertexSet::single(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex v : frontier) next |= g.neighbors(v);
        next = (next & within) - seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet rest = within;
    while (!rest.empty()) {
        VertexSet c = component_of(g, rest.first(), within);
        out.push_back(c);
        rest -= c;
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

namespace {

bool separates(const Graph& g, VertexSet s) {
    const VertexSet rest = g.vertices() - s;
    if (rest.size() < 2) return false;
    return component_of(g, rest.first(), rest) != rest;
}

}  // namespace

bool is_k_connected(const Graph& g, int k) {
    if (k <= 0) return true;
    if (g.order() < k + 1) return false;
    const auto pool = g.vertices().to_vector();
    for (int sz = 0; sz < k; ++sz)
        if (for_each_subset_of_size(pool, sz, [&](VertexSet s) { return separates(g, s); }))
            return false;
    return true;
}

std::optional<VertexSet> minimum_separator(const Graph& g) {
    const auto pool = g.vertices().to_vector();
    for (int sz = 0; sz + 2 <= g.order(); ++sz) {
        std::optional<VertexSet> found;
        for_each_subset_of_size(pool, sz, [&](VertexSet s) {
            if (separates(g, s)) {
                found = s;
                return true;
            }
            return false;
        });
        if (found) return found;
    }
    return std::nullopt;
}

int vertex_connectivity(const Graph& g) {
    if (g.order() == 0) return 0;
    auto sep = minimum_separator(g);
    return sep ? sep->size() : g.order() - 1;
}

std::string to_string(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.order() << " m=" << g.size() << " {";
    bool first = true;
    for (const Edge& e : g.edges()) {
        os << (first ? "" : ", ") << e.u << "-" << e.v;
        first = false;
    }
    os << "}";
    return os.str();
}

}  // namespace gcol
