#include "gcol/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "gcol/error.hpp"

namespace gcol {

VertexSet Coloring::color_class(int c) const {
    VertexSet s;
    for (std::size_t v = 0; v < color.size(); ++v)
        if (color[v] == c) s.insert(static_cast<Vertex>(v));
    return s;
}

int Coloring::colors_used() const {
    std::uint64_t seen = 0;
    int count = 0;
    for (int c : color) {
        if (c <= 0) continue;
        if (c > 64) {
            ++count;  // not tracked by the mask; colours that large never repeat in practice
            continue;
        }
        if (!((seen >> (c - 1)) & 1u)) {
            seen |= std::uint64_t{1} << (c - 1);
            ++count;
        }
    }
    return count;
}

bool is_proper(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.color.size()) != g.order()) return false;
    for (const Edge& e : g.edges())
        if (c.color[e.u] != 0 && c.color[e.u] == c.color[e.v]) return false;
    return true;
}

bool is_proper_total(const Graph& g, const Coloring& c) {
    if (!is_proper(g, c)) return false;
    return std::all_of(c.color.begin(), c.color.end(),
                       [&](int x) { return x >= 1 && x <= c.num_colors; });
}

namespace {

void check_bound(const Graph& g, const OracleLimits& limits, const char* what) {
    if (g.order() > limits.max_exhaustive_order)
        throw BoundExceeded(std::string(what) + ": order " + std::to_string(g.order()) +
                            " exceeds exhaustive bound " +
                            std::to_string(limits.max_exhaustive_order));
}

// Decision search for an r-colouring, DSATUR vertex order, fresh colours
// introduced in index order only.
class ColoringSearch {
public:
    ColoringSearch(const Graph& g, int r)
        : g_(g), n_(g.order()), r_(r), color_(n_, 0), count_(n_), forbidden_(n_, 0),
          class_size_(r + 1, 0) {
        for (auto& a : count_) a.fill(0);
        full_ = r >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << r) - 1);
    }

    bool precolor(const std::vector<int>& pre) {
        for (Vertex v = 0; v < static_cast<Vertex>(pre.size()); ++v) {
            const int c = pre[v];
            if (c == 0) continue;
            if (c < 0 || c > r_) return false;
            if ((forbidden_[v] >> (c - 1)) & 1u) return false;
            assign(v, c);
            ++colored_;
        }
        return true;
    }

    bool run() { return search(); }

    Coloring result() const { return Coloring{color_, r_}; }

private:
    void assign(Vertex v, int c) {
        color_[v] = c;
        ++class_size_[c];
        for (Vertex u : g_.neighbors(v))
            if (count_[u][c - 1]++ == 0) forbidden_[u] |= std::uint64_t{1} << (c - 1);
    }

    void unassign(Vertex v) {
        const int c = color_[v];
        color_[v] = 0;
        --class_size_[c];
        for (Vertex u : g_.neighbors(v))
            if (--count_[u][c - 1] == 0) forbidden_[u] &= ~(std::uint64_t{1} << (c - 1));
    }

    bool search() {
        if (colored_ == n_) return true;
        Vertex best = -1;
        int best_sat = -1;
        int best_deg = -1;
        for (Vertex v = 0; v < n_; ++v) {
            if (color_[v] != 0) continue;
            const int sat = std::popcount(forbidden_[v] & full_);
            if (sat > best_sat || (sat == best_sat && g_.degree(v) > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = g_.degree(v);
            }
        }
        std::uint64_t allowed = ~forbidden_[best] & full_;
        bool fresh_tried = false;
        while (allowed != 0) {
            const int c = std::countr_zero(allowed) + 1;
            allowed &= allowed - 1;
            if (class_size_[c] == 0) {
                if (fresh_tried) continue;
                fresh_tried = true;
            }
            assign(best, c);
            ++colored_;
            if (search()) return true;
            --colored_;
            unassign(best);
        }
        return false;
    }

    const Graph& g_;
    int n_;
    int r_;
    int colored_ = 0;
    std::uint64_t full_ = 0;
    std::vector<int> color_;
    std::vector<std::array<std::uint8_t, 64>> count_;
    std::vector<std::uint64_t> forbidden_;
    std::vector<int> class_size_;
};

Coloring greedy_dsatur(const Graph& g) {
    const int n = g.order();
    Coloring c{std::vector<int>(n, 0), 0};
    std::vector<std::uint64_t> forb(n, 0);
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        int best_sat = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (c.color[v] != 0) continue;
            const int sat = std::popcount(forb[v]);
            if (sat > best_sat || (sat == best_sat && g.degree(v) > g.degree(best))) {
                best = v;
                best_sat = sat;
            }
        }
        const int col = std::countr_zero(~forb[best]) + 1;
        c.color[best] = col;
        c.num_colors = std::max(c.num_colors, col);
        for (Vertex u : g.neighbors(best)) forb[u] |= std::uint64_t{1} << (col - 1);
    }
    return c;
}

// Tomita-style branch and bound with greedy colouring bounds.
class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g) {}

    VertexSet run(VertexSet candidates) {
        expand(VertexSet{}, candidates);
        return best_;
    }

private:
    void expand(VertexSet current, VertexSet candidates) {
        if (candidates.empty()) {
            if (current.size() > best_.size()) best_ = current;
            return;
        }
        // Greedy colour classes of the candidates give an upper bound per vertex.
        std::vector<std::pair<Vertex, int>> order;
        VertexSet uncolored = candidates;
        int color = 0;
        while (!uncolored.empty()) {
            ++color;
            VertexSet avail = uncolored;
            while (!avail.empty()) {
                Vertex v = avail.first();
                avail -= g_.neighbors(v) | VertexSet::single(v);
                uncolored.erase(v);
                order.push_back({v, color});
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            if (current.size() + it->second <= best_.size()) return;
            const Vertex v = it->first;
            VertexSet next = current;
            next.insert(v);
            expand(next, candidates & g_.neighbors(v));
            candidates.erase(v);
        }
    }

    const Graph& g_;
    VertexSet best_;
};

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
    if (p.empty()) {
        if (x.empty()) out.push_back(r);
        return;
    }
    Vertex pivot = -1;
    int best = -1;
    for (Vertex u : p | x) {
        const int k = (p & g.neighbors(u)).size();
        if (k > best) {
            best = k;
            pivot = u;
        }
    }
    for (Vertex v : p - g.neighbors(pivot)) {
        VertexSet rv = r;
        rv.insert(v);
        bron_kerbosch(g, rv, p & g.neighbors(v), x & g.neighbors(v), out);
        p.erase(v);
        x.insert(v);
    }
}

}  // namespace

std::optional<Coloring> find_coloring(const Graph& g, int r, const std::vector<int>& precolor) {
    if (r < 0) return std::nullopt;
    if (r > 64) throw InvalidArgument("find_coloring: more than 64 colours unsupported");
    if (g.order() == 0) return Coloring{{}, r};
    if (r == 0) return std::nullopt;
    ColoringSearch s(g, r);
    if (!s.precolor(precolor)) return std::nullopt;
    if (!s.run()) return std::nullopt;
    return s.result();
}

ChromaticResult chromatic_number(const Graph& g, const OracleLimits& limits) {
    check_bound(g, limits, "chromatic_number");
    if (g.order() == 0) return {0, Coloring{{}, 0}};
    const VertexSet clique = maximum_clique(g);
    Coloring greedy = greedy_dsatur(g);
    const int upper = greedy.num_colors;
    // Colouring the clique 1..omega first loses no generality.
    std::vector<int> pre(g.order(), 0);
    int next = 1;
    for (Vertex v : clique) pre[v] = next++;
    for (int r = clique.size(); r < upper; ++r) {
        ColoringSearch s(g, r);
        if (!s.precolor(pre)) continue;
        if (s.run()) return {r, s.result()};
    }
    return {upper, greedy};
}

ChromaticResult chromatic_number_naive(const Graph& g) {
    const int n = g.order();
    if (n == 0) return {0, Coloring{{}, 0}};
    const auto edges = g.edges();
    for (int r = 1;; ++r) {
        std::vector<int> a(n, 1);
        while (true) {
            bool ok = true;
            for (const Edge& e : edges)
                if (a[e.u] == a[e.v]) {
                    ok = false;
                    break;
                }
            if (ok) return {r, Coloring{a, r}};
            int i = 0;
            while (i < n && a[i] == r) a[i++] = 1;
            if (i == n) break;
            ++a[i];
        }
    }
}

VertexSet maximum_clique(const Graph& g, VertexSet within) { return CliqueSearch(g).run(within); }
VertexSet maximum_clique(const Graph& g) { return maximum_clique(g, g.vertices()); }
int clique_number(const Graph& g) { return maximum_clique(g).size(); }

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    if (g.order() == 0) return out;
    bron_kerbosch(g, VertexSet{}, g.vertices(), VertexSet{}, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> maximal_cliques_at_least(const Graph& g, int t) {
    std::vector<VertexSet> out;
    for (VertexSet c : maximal_cliques(g))
        if (c.size() >= t) out.push_back(c);
    return out;
}

VertexSet maximum_independent_set(const Graph& g) { return maximum_clique(complement(g)); }
int independence_number(const Graph& g) { return maximum_independent_set(g).size(); }

int local_clique_number(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order()) throw InvalidArgument("local_clique_number: vertex out of range");
    return 1 + maximum_clique(g, g.neighbors(v)).size();
}

std::vector<int> local_clique_numbers(const Graph& g) {
    std::vector<int> out(g.order());
    for (Vertex v = 0; v < g.order(); ++v) out[v] = local_clique_number(g, v);
    return out;
}

int rho(const Graph& g) {
    if (g.order() == 0) throw InvalidArgument("rho of the empty graph");
    int best = g.degree(0) - local_clique_number(g, 0);
    for (Vertex v = 1; v < g.order(); ++v) best = std::max(best, g.degree(v) - local_clique_number(g, v));
    return best;
}

InducedSubgraph vertex_critical_subgraph(const Graph& g, const OracleLimits& limits) {
    check_bound(g, limits, "vertex_critical_subgraph");
    const int chi = chromatic_number(g, limits).chi;
    VertexSet keep = g.vertices();
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSet trial = keep - VertexSet::single(v);
        if (chromatic_number(induced_subgraph(g, trial).graph, limits).chi == chi) keep = trial;
    }
    return induced_subgraph(g, keep);
}

bool is_vertex_critical(const Graph& g, const OracleLimits& limits) {
    check_bound(g, limits, "is_vertex_critical");
    const int chi = chromatic_number(g, limits).chi;
    for (Vertex v = 0; v < g.order(); ++v)
        if (chromatic_number(induced_subgraph(g, g.vertices() - VertexSet::single(v)).graph, limits).chi >= chi)
            return false;
    return true;
}

bool is_critical_edge(const Graph& g, Edge e, const OracleLimits& limits) {
    if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v))
        throw InvalidArgument("is_critical_edge: not an edge");
    check_bound(g, limits, "is_critical_edge");
    Graph h = g;
    h.remove_edge(e.u, e.v);
    return chromatic_number(h, limits).chi < chromatic_number(g, limits).chi;
}

VertexSet kempe_component(const Graph& g, const Coloring& c, Vertex x, Vertex y) {
    if (!is_proper(g, c)) throw InvalidArgument("kempe_component: colouring is not proper");
    if (x < 0 || y < 0 || x >= g.order() || y >= g.order())
        throw InvalidArgument("kempe_component: vertex out of range");
    if (c.color[x] == 0 || c.color[y] == 0)
        throw InvalidArgument("kempe_component: x and y must be coloured");
    const VertexSet within = c.color_class(c.color[x]) | c.color_class(c.color[y]);
    return component_of(g, x, within);
}

int strong_padding(int order, int r) {
    if (r <= 0) throw InvalidArgument("strong colouring needs r >= 1");
    return (r - order % r) % r;
}

namespace {

// Enumerates partitions of `rest` into r-sets, smallest remaining vertex
// opening each part. Returns false as soon as `accept` rejects one.
template <class Fn>
bool all_partitions(VertexSet rest, int r, std::vector<VertexSet>& parts, Fn&& accept) {
    if (rest.empty()) return accept(parts);
    const Vertex head = rest.first();
    const auto pool = (rest - VertexSet::single(head)).to_vector();
    const int k = r - 1;
    const int m = static_cast<int>(pool.size());
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        VertexSet part = VertexSet::single(head);
        for (int i : idx) part.insert(pool[i]);
        parts.push_back(part);
        const bool ok = all_partitions(rest - part, r, parts, accept);
        parts.pop_back();
        if (!ok) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

bool strong_chromatic_check(const Graph& g, int r, const OracleLimits& limits) {
    const int padded = g.order() + strong_padding(g.order(), r);
    if (padded > limits.max_exhaustive_order || padded > Graph::kMaxOrder)
        throw BoundExceeded("strong_chromatic_check: padded order " + std::to_string(padded) +
                            " exceeds exhaustive bound");
    if (r > 64) throw BoundExceeded("strong_chromatic_check: r above 64 unsupported");
    Graph base(padded);
    for (const Edge& e : g.edges()) base.add_edge(e.u, e.v);
    std::vector<VertexSet> parts;
    return all_partitions(base.vertices(), r, parts, [&](const std::vector<VertexSet>& ps) {
        // Rainbow parts are exactly proper r-colourings once each part is a clique.
        Graph aug = base;
        for (VertexSet p : ps)
            for (Vertex u : p)
                for (Vertex v : p)
                    if (u < v) aug.add_edge(u, v);
        return find_coloring(aug, r).has_value();
    });
}

InvariantReport invariant_report(const Graph& g, const OracleLimits& limits) {
    InvariantReport rep;
    rep.order = g.order();
    rep.size = g.size();
    auto chi = chromatic_number(g, limits);
    rep.chi = chi.chi;
    rep.chi_certificate = chi.certificate;
    rep.omega = clique_number(g);
    rep.alpha = independence_number(g);
    rep.delta_max = g.max_degree();
    rep.delta_min = g.min_degree();
    rep.omega_v = local_clique_numbers(g);
    rep.rho = g.order() > 0 ? rho(g) : 0;
    return rep;
}

}  // namespace gcol
