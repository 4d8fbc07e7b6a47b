#include "gcol/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edmonds_karp_max_flow.hpp>
#include <json.hpp>

#include "gcol/choosability.hpp"
#include "gcol/error.hpp"
#include "gcol/graph_io.hpp"
#include "gcol/oracles.hpp"

namespace gcol {

namespace {

// Compare as increasing vertex sequences, the order used for tie-breaks.
bool lex_less(VertexSet a, VertexSet b) {
    auto x = a.to_vector(), y = b.to_vector();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

std::string set_str(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (Vertex v : s) {
        out += (first ? "" : ",") + std::to_string(v);
        first = false;
    }
    return out + "}";
}

int ceil_int(const Rational& t) { return static_cast<int>(ceil_of(t)); }

// Components of the intersection graph, as lists of clique indices ordered
// by their least vertex.
std::vector<std::vector<int>> clique_components(const std::vector<VertexSet>& cliques) {
    const int m = static_cast<int>(cliques.size());
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (cliques[i].intersects(cliques[j])) parent[find(i)] = find(j);
    std::vector<std::vector<int>> comps;
    std::vector<int> slot(m, -1);
    for (int i = 0; i < m; ++i) {
        int r = find(i);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[slot[r]].push_back(i);
    }
    auto least = [&](const std::vector<int>& c) {
        VertexSet u;
        for (int i : c) u |= cliques[i];
        return u.first();
    };
    std::sort(comps.begin(), comps.end(), [&](const auto& a, const auto& b) { return least(a) < least(b); });
    return comps;
}

std::string dump_state(const Graph& g, const CliqueDecomposition& d) {
    return "graph6=" + serialize_graph6(g) + " decomposition=" + decomposition_to_json(d);
}

// Records or throws, depending on strictness.
void flag(CliqueDecomposition& d, const DecompositionOptions& o, bool violated, const std::string& what) {
    d.flags.push_back(what);
    if (violated) {
        d.hypotheses_verified = false;
        if (o.strict) throw HypothesisError(what);
    }
}

void check_class(CliqueDecomposition& d, const Graph& g, int k, const DecompositionOptions& o) {
    if (g.order() <= o.class_scan_order) {
        ChoosabilityOptions co;
        co.max_order = std::max(co.max_order, g.order());
        if (auto s = has_induced_dk_choosable_subgraph(g, k, co))
            flag(d, o, true, "induced d_" + std::to_string(k) + "-choosable subgraph on " + set_str(*s));
    } else if (o.assume_no_dk_choosable) {
        d.flags.push_back("assumed: no induced d_" + std::to_string(k) + "-choosable subgraph (order " +
                          std::to_string(g.order()) + ")");
        d.hypotheses_verified = false;
    } else {
        flag(d, o, true, "unchecked: no induced d_" + std::to_string(k) + "-choosable subgraph (order " +
                             std::to_string(g.order()) + " above scan bound)");
    }
}

[[noreturn]] void fail_verification(const Graph& g, const CliqueDecomposition& d, const std::string& why) {
    if (d.hypotheses_verified) throw FalsificationError("decomposition check failed: " + why + "; " + dump_state(g, d));
    std::string flags;
    for (const auto& f : d.flags) flags += "; " + f;
    throw HypothesisError("decomposition check failed: " + why + flags);
}

// Vertices of s whose neighbourhood covers s minus themselves.
VertexSet universal_in(const Graph& g, VertexSet s) {
    VertexSet out;
    for (Vertex v : s)
        if ((s - VertexSet::single(v)).is_subset_of(g.neighbors(v))) out.insert(v);
    return out;
}

std::vector<VertexSet> maximum_cliques_in(const Graph& g, VertexSet s) {
    auto sub = induced_subgraph(g, s);
    auto all = maximal_cliques(sub.graph);
    int best = 0;
    for (auto c : all) best = std::max(best, c.size());
    std::vector<VertexSet> out;
    for (auto c : all)
        if (c.size() == best) out.push_back(sub.parent_set(c));
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

// Calls fn on every independent set of g inside s with 1..max_size vertices;
// stops early when fn returns false.
bool for_each_independent(const Graph& g, VertexSet s, int max_size, const std::function<bool(VertexSet)>& fn) {
    std::function<bool(VertexSet, VertexSet)> rec = [&](VertexSet chosen, VertexSet cand) {
        for (Vertex v : cand) {
            VertexSet next = chosen | VertexSet::single(v);
            if (!fn(next)) return false;
            if (next.size() < max_size) {
                VertexSet later(cand.bits() & ~((std::uint64_t{2} << v) - 1));
                if (!rec(next, later - g.neighbors(v))) return false;
            }
        }
        return true;
    };
    return rec(VertexSet{}, s);
}

// Shared by both checks: blocks disjoint and covering exactly the big cliques.
std::optional<std::string> check_cover(const Graph& g, const CliqueDecomposition& d) {
    VertexSet seen;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        if (d.blocks[i].D.intersects(seen)) return "block " + std::to_string(i) + " overlaps an earlier block";
        seen |= d.blocks[i].D;
    }
    VertexSet want;
    for (auto c : big_cliques(g, d.t)) want |= c;
    if (seen != want) return "blocks cover " + set_str(seen) + " but the big cliques cover " + set_str(want);
    return std::nullopt;
}

}  // namespace

Rational threshold_U(int k, int omega, int delta) {
    if (k < 1) throw InvalidArgument("threshold_U: k must be at least 1");
    const Rational K(k), W(omega), D(delta);
    Rational a = Rational(2, 3) * (D + 1);
    Rational b = (D + 3 * K + 2) / 2;
    Rational c = Rational(2 * k, 2 * k + 1) * (W + K) - 1;
    Rational e = Rational(k + 1, k + 2) * W + 2 * K + 1;
    return std::max({a, b, c, e});
}

Rational threshold_U_prime(int k, int omega, int delta) {
    Rational extra = Rational(k + 2, k + 3) * Rational(delta) + 1;
    return std::max(extra, threshold_U(k, omega, delta));
}

ThresholdParams threshold_params(int k, int omega, int delta) {
    return {k, omega, delta, threshold_U(k, omega, delta), threshold_U_prime(k, omega, delta)};
}

int CliqueDecomposition::block_of(Vertex v) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].D.contains(v)) return static_cast<int>(i);
    return -1;
}

VertexSet CliqueDecomposition::covered() const {
    VertexSet s;
    for (const auto& b : blocks) s |= b.D;
    return s;
}

std::vector<VertexSet> big_cliques(const Graph& g, const Rational& t) {
    return maximal_cliques_at_least(g, std::max(0, ceil_int(t)));
}

bool intersection_graph_is_cluster(const std::vector<VertexSet>& cliques) {
    const std::size_t m = cliques.size();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c) {
                if (a == b || b == c || a == c) continue;
                if (cliques[a].intersects(cliques[b]) && cliques[b].intersects(cliques[c]) &&
                    !cliques[a].intersects(cliques[c]))
                    return false;
            }
    return true;
}

CliqueDecomposition decompose_k1(const Graph& g, int t, const DecompositionOptions& options) {
    CliqueDecomposition d;
    d.t = t;
    d.k = 1;
    d.hypotheses_verified = true;
    const int delta = g.max_degree();
    if (delta < 8) flag(d, options, true, "Delta = " + std::to_string(delta) + " < 8");
    if (g.order() > 0 && clique_number(g) >= delta && delta > 0)
        flag(d, options, true, "contains K_" + std::to_string(delta));
    if (2 * t < delta + 5) flag(d, options, true, "t = " + std::to_string(t) + " < (Delta+5)/2");
    if (t > delta - 1) flag(d, options, true, "t = " + std::to_string(t) + " > Delta-1");
    check_class(d, g, 1, options);

    auto cliques = big_cliques(g, t);
    for (const auto& comp : clique_components(cliques)) {
        DecompositionBlock b;
        for (int i : comp) b.D |= cliques[i];
        if (comp.size() == 1) {
            b.C = b.K = b.D;
        } else {
            std::vector<VertexSet> cand;
            for (int i : comp) cand.push_back(cliques[i]);
            std::sort(cand.begin(), cand.end(), [](VertexSet a, VertexSet c) {
                if (a.size() != c.size()) return a.size() > c.size();
                return lex_less(a, c);
            });
            b.C = cand.front();
            for (auto c : cand) {
                if ((b.D - c).size() == 1) {
                    b.C = c;
                    break;
                }
            }
            VertexSet rest = b.D - b.C;
            if (rest.size() == 1) {
                b.x = rest.first();
                b.K = g.neighbors(*b.x) & b.C;
            } else {
                b.K = universal_in(g, b.D);
            }
        }
        d.blocks.push_back(b);
    }
    if (auto bad = check_decomposition_k1(g, d)) fail_verification(g, d, *bad);
    return d;
}

std::optional<std::string> check_decomposition_k1(const Graph& g, const CliqueDecomposition& d) {
    if (auto bad = check_cover(g, d)) return bad;
    const auto cliques = big_cliques(g, d.t);
    const int t = ceil_int(d.t);
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        const auto& b = d.blocks[i];
        const std::string tag = "block " + std::to_string(i) + ": ";
        if (std::find(cliques.begin(), cliques.end(), b.C) == cliques.end())
            return tag + "C = " + set_str(b.C) + " is not a maximal clique with >= t vertices";
        if (!b.x) {
            if (b.D != b.C) return tag + "D = " + set_str(b.D) + " is neither C nor C + x";
            if (b.K != b.C) return tag + "K differs from C";
        } else {
            if (b.C.contains(*b.x) || b.D != (b.C | VertexSet::single(*b.x)))
                return tag + "D = " + set_str(b.D) + " is not C + x";
            VertexSet nx = g.neighbors(*b.x) & b.C;
            if (nx.size() < t - 1)
                return tag + "x = " + std::to_string(*b.x) + " has " + std::to_string(nx.size()) +
                       " < t-1 neighbours in C";
            if (b.K != nx) return tag + "K differs from N(x) & C";
        }
        for (Vertex v : g.vertices() - b.D) {
            int nb = (g.neighbors(v) & b.C).size();
            if (nb > t - 2)
                return tag + "vertex " + std::to_string(v) + " outside D has " + std::to_string(nb) +
                       " > t-2 neighbours in C";
        }
    }
    return std::nullopt;
}

CliqueDecomposition decompose_general(const Graph& g, int k, const Rational& t, const DecompositionOptions& options) {
    if (k < 1) throw InvalidArgument("decompose_general: k must be at least 1");
    CliqueDecomposition d;
    d.t = t;
    d.k = k;
    d.hypotheses_verified = true;
    const int omega = g.order() ? clique_number(g) : 0;
    const int delta = g.max_degree();
    const Rational u = threshold_U(k, omega, delta);
    if (t < u) flag(d, options, true, "t = " + to_string(t) + " < U = " + to_string(u));
    check_class(d, g, k, options);

    auto cliques = big_cliques(g, t);
    if (!intersection_graph_is_cluster(cliques))
        fail_verification(g, d, "intersection graph of the big cliques is not a disjoint union of complete graphs");
    for (const auto& comp : clique_components(cliques)) {
        DecompositionBlock b;
        for (int i : comp) b.D |= cliques[i];
        b.C = maximum_cliques_in(g, b.D).front();
        b.K = universal_in(g, b.D);
        d.blocks.push_back(b);
    }
    if (auto bad = check_decomposition_general(g, d)) fail_verification(g, d, *bad);
    return d;
}

std::optional<std::string> check_decomposition_general(const Graph& g, const CliqueDecomposition& d) {
    if (auto bad = check_cover(g, d)) return bad;
    const auto cliques = big_cliques(g, d.t);
    if (!intersection_graph_is_cluster(cliques)) return "intersection graph is not a cluster graph";
    const int k = d.k;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        const auto& b = d.blocks[i];
        const std::string tag = "block " + std::to_string(i) + ": ";
        VertexSet united;
        for (auto c : cliques)
            if (c.is_subset_of(b.D)) united |= c;
        if (united != b.D) return tag + "D is not a union of big cliques";
        const auto maxima = maximum_cliques_in(g, b.D);
        const int w = maxima.front().size();
        if (b.C.size() != w || !is_clique(g, b.C) || !b.C.is_subset_of(b.D))
            return tag + "C is not a maximum clique of G[D]";
        if (b.K != universal_in(g, b.D)) return tag + "K is not the universal set of G[D]";
        if (b.D.size() > w + 2 * k)
            return tag + "|D| = " + std::to_string(b.D.size()) + " > w + 2k = " + std::to_string(w + 2 * k);
        if (b.K.size() < 3 * k + 1)
            return tag + std::to_string(b.K.size()) + " universal vertices < 3k+1";
        auto sub = induced_subgraph(g, b.D);
        int alpha = independence_number(sub.graph);
        if (alpha > k + 1) return tag + "independence number " + std::to_string(alpha) + " > k+1";
        std::optional<std::string> bad;
        for (auto L : maxima) {
            for_each_independent(g, b.D, k + 1, [&](VertexSet I) {
                VertexSet common = L;
                for (Vertex v : I) common &= g.neighbors(v);
                Rational bound = Rational(L.size()) - Rational(I.size()) * (Rational(L.size() + k) - d.t);
                if (Rational(common.size()) < bound) {
                    bad = tag + "clique " + set_str(L) + " meets the common neighbourhood of " + set_str(I) +
                          " in " + std::to_string(common.size()) + " < " + to_string(bound);
                    return false;
                }
                return true;
            });
            if (bad) return bad;
        }
    }
    return std::nullopt;
}

std::string decomposition_to_json(const CliqueDecomposition& d) {
    nlohmann::json j;
    j["t"] = to_string(d.t);
    j["k"] = d.k;
    j["blocks"] = nlohmann::json::array();
    for (const auto& b : d.blocks) {
        nlohmann::json e;
        e["D"] = b.D.to_vector();
        e["C"] = b.C.to_vector();
        e["K"] = b.K.to_vector();
        e["x"] = b.x ? nlohmann::json(*b.x) : nlohmann::json(nullptr);
        j["blocks"].push_back(e);
    }
    if (!d.flags.empty()) j["flags"] = d.flags;
    return j.dump();
}

namespace {

using FlowTraits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<boost::edge_capacity_t, long,
                    boost::property<boost::edge_residual_capacity_t, long,
                                    boost::property<boost::edge_reverse_t, FlowTraits::edge_descriptor>>>>;

// Internally disjoint s-t paths: v splits into 2v -> 2v+1 with capacity 1.
long local_connectivity(const Graph& g, Vertex s, Vertex t) {
    const int n = g.order();
    FlowGraph fg(2 * n);
    auto cap = boost::get(boost::edge_capacity, fg);
    auto rev = boost::get(boost::edge_reverse, fg);
    auto arc = [&](int a, int b, long c) {
        auto e1 = boost::add_edge(a, b, fg).first;
        auto e2 = boost::add_edge(b, a, fg).first;
        cap[e1] = c;
        cap[e2] = 0;
        rev[e1] = e2;
        rev[e2] = e1;
    };
    const long big = n;
    for (Vertex v = 0; v < n; ++v) arc(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
    for (const Edge& e : g.edges()) {
        arc(2 * e.u + 1, 2 * e.v, big);
        arc(2 * e.v + 1, 2 * e.u, big);
    }
    return boost::edmonds_karp_max_flow(fg, 2 * s + 1, 2 * t);
}

}  // namespace

int vertex_connectivity_by_flow(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    int best = n - 1;
    for (Vertex s = 0; s < n; ++s)
        for (Vertex t = s + 1; t < n; ++t)
            if (!g.adjacent(s, t)) best = std::min<int>(best, static_cast<int>(local_connectivity(g, s, t)));
    return best;
}

namespace {

Rational avg_in(const Graph& g, VertexSet s) { return Rational(2 * edges_within(g, s), s.size()); }

struct MaderSearch {
    const Graph& g;
    int k;
    Rational target;

    bool good(VertexSet s) const {
        if (s.size() < k + 2 || avg_in(g, s) <= target) return false;
        return is_k_connected(induced_subgraph(g, s).graph, k + 1);
    }

    std::optional<VertexSet> run(VertexSet s, int depth) {
        if (s.size() < k + 2 || avg_in(g, s) <= target || depth > 64) return std::nullopt;
        if (good(s)) return s;
        // peel lowest degree vertices first while the average stays high
        for (bool peeled = true; peeled;) {
            peeled = false;
            std::vector<std::pair<int, Vertex>> order;
            for (Vertex v : s) order.push_back({(g.neighbors(v) & s).size(), v});
            std::sort(order.begin(), order.end());
            for (auto [deg, v] : order) {
                VertexSet rest = s - VertexSet::single(v);
                if (rest.size() >= k + 2 && avg_in(g, rest) > target) {
                    s = rest;
                    peeled = true;
                    break;
                }
            }
        }
        auto sub = induced_subgraph(g, s);
        if (is_k_connected(sub.graph, k + 1)) return s;
        auto sep = minimum_separator(sub.graph);
        if (!sep) return std::nullopt;
        VertexSet x = sub.parent_set(*sep);
        for (auto part : components(sub.graph, sub.graph.vertices() - *sep))
            if (auto found = run(sub.parent_set(part) | x, depth + 1)) return found;
        return std::nullopt;
    }
};

}  // namespace

MaderResult mader_dense_subgraph(const Graph& g, int k) {
    if (k < 1) throw InvalidArgument("mader_dense_subgraph: k must be at least 1");
    if (g.order() == 0) throw HypothesisError("mader_dense_subgraph: empty graph");
    const Rational d = average_degree(g);
    if (d < 4 * k)
        throw HypothesisError("mader_dense_subgraph: d(g) = " + to_string(d) + " < 4k = " + std::to_string(4 * k));
    MaderSearch search{g, k, d - 2 * k};
    auto found = search.run(g.vertices(), 0);
    if (!found && g.order() <= 20) {
        // exhaustive fallback, largest sets first
        const std::uint64_t full = g.vertices().bits();
        for (int size = g.order(); size >= k + 2 && !found; --size)
            for (std::uint64_t m = full; m; m = (m - 1) & full)
                if (std::popcount(m) == size && search.good(VertexSet(m))) {
                    found = VertexSet(m);
                    break;
                }
    }
    if (!found)
        throw FalsificationError("mader_dense_subgraph: no (k+1)-connected induced subgraph with d > " +
                                 to_string(search.target) + "; graph6=" + serialize_graph6(g) +
                                 " k=" + std::to_string(k));
    MaderResult r;
    r.vertices = *found;
    r.subgraph = induced_subgraph(g, *found).graph;
    r.average_degree = average_degree(r.subgraph);
    r.connectivity = vertex_connectivity_by_flow(r.subgraph);
    if (r.connectivity < k + 1 || r.average_degree <= search.target)
        throw FalsificationError("mader_dense_subgraph: recheck failed (connectivity " +
                                 std::to_string(r.connectivity) + ", d = " + to_string(r.average_degree) + ")");
    return r;
}

namespace {

// Nonempty subsets of b's vertices by size, then lexicographically.
std::optional<VertexSet> first_subset(int n, const std::function<bool(VertexSet)>& ok) {
    for (int size = 1; size <= n; ++size) {
        std::vector<int> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            VertexSet s;
            for (int i : idx) s.insert(i);
            if (ok(s)) return s;
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

Graph apex_join(const Graph& h) { return join(complete_graph(1), h); }

}  // namespace

DenseNeighborhoodReport clique_from_dense_neighborhood(const Graph& b, int k, int max_order) {
    if (k < 1) throw InvalidArgument("clique_from_dense_neighborhood: k must be at least 1");
    if (b.order() > max_order)
        throw BoundExceeded("clique_from_dense_neighborhood: order " + std::to_string(b.order()) + " > " +
                            std::to_string(max_order));
    if (b.order() == 0) throw InvalidArgument("clique_from_dense_neighborhood: empty graph");
    DenseNeighborhoodReport r;
    r.order = b.order();
    r.average_degree = average_degree(b);
    r.omega = clique_number(b);
    r.min_degree = b.min_degree();
    ChoosabilityOptions co;
    co.max_order = std::max(co.max_order, b.order() + 1);

    if (k == 1) {
        DenseLemmaCheck low{"low-vertex-high-average-degree", r.average_degree >= r.omega + 2, true, {}, {}};
        if (low.hypothesis) {
            low.witness = first_subset(b.order(), [&](VertexSet s) {
                Graph h = induced_subgraph(b, s).graph;
                DemandFunction f(h.order() + 1);
                f[0] = h.order();
                for (Vertex v = 0; v < h.order(); ++v) f[v + 1] = h.degree(v);
                return is_f_choosable(apex_join(h), f, co).choosable;
            });
            low.holds = low.witness.has_value();
            low.detail = low.holds ? "witness H = " + set_str(*low.witness) : "no witness H";
        }
        r.checks.push_back(low);

        DenseLemmaCheck high{"vertex-high-average-degree", r.average_degree >= r.omega + 3, true, {}, {}};
        if (high.hypothesis) {
            high.witness = first_subset(b.order(), [&](VertexSet s) {
                return is_dk_choosable(apex_join(induced_subgraph(b, s).graph), 1, co).choosable;
            });
            high.holds = high.witness.has_value();
            high.detail = high.holds ? "witness H = " + set_str(*high.witness) : "no witness H";
        }
        r.checks.push_back(high);
    }

    DenseLemmaCheck clique{"high-min-degree-gives-clique", false, true, {}, {}};
    clique.hypothesis = Rational(r.min_degree) >= Rational(2 * k + 1, 2 * k + 2) * Rational(b.order()) + (k - 1);
    if (clique.hypothesis) {
        if (is_dk_choosable(apex_join(b), k, co).choosable) {
            clique.detail = "K_1 + b is d_" + std::to_string(k) + "-choosable";
        } else {
            clique.holds = r.omega >= b.order() - 2 * k;
            clique.detail = "omega = " + std::to_string(r.omega) + ", |b| - 2k = " + std::to_string(b.order() - 2 * k);
        }
    }
    r.checks.push_back(clique);
    return r;
}

}  // namespace gcol
