#include "gcol/recolorer.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include <json.hpp>

#include "gcol/decomposition.hpp"
#include "gcol/error.hpp"
#include "gcol/graph_io.hpp"
#include "gcol/transversal.hpp"

namespace gcol {

using nlohmann::json;

VertexSet compute_Oz(const Graph& g, const Coloring& pi, Vertex z) {
    VertexSet nb;
    for (Vertex v : g.neighbors(z))
        if (pi[v] != 0) nb.insert(v);
    std::map<int, int> count;
    for (Vertex v : nb) ++count[pi[v]];
    VertexSet out;
    for (Vertex v : nb)
        if (count[pi[v]] == 1) out.insert(v);
    return out;
}

namespace {

struct Run {
    RecolorOutcome out;

    void log(const std::string& stage, json detail) {
        detail["stage"] = stage;
        out.trace.push_back(detail.dump());
    }
    void flag(const std::string& what) { out.flags.push_back(what); }
};

// Repeatedly drops a vertex with fewer than `colors` neighbours left; such
// vertices can be coloured greedily afterwards, last removed first.
VertexSet peel(const Graph& g, int colors, std::vector<Vertex>& removed) {
    VertexSet core = g.vertices();
    for (bool changed = true; changed;) {
        changed = false;
        for (Vertex v : core)
            if ((g.neighbors(v) & core).size() < colors) {
                core.erase(v);
                removed.push_back(v);
                changed = true;
                break;
            }
    }
    return core;
}

void extend_greedily(const Graph& g, std::vector<int>& color, const std::vector<Vertex>& removed, int colors) {
    for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
        std::uint64_t used = 0;
        for (Vertex u : g.neighbors(*it))
            if (color[u]) used |= std::uint64_t{1} << color[u];
        int c = 1;
        while (used >> c & 1) ++c;
        if (c > colors) throw FalsificationError("greedy extension ran out of colours at vertex " + std::to_string(*it));
        color[*it] = c;
    }
}

Coloring lift(const InducedSubgraph& core, const Coloring& local, int n) {
    Coloring c;
    c.color.assign(n, 0);
    c.num_colors = local.num_colors;
    for (Vertex v = 0; v < core.graph.order(); ++v) c.color[core.to_parent[v]] = local.color[v];
    return c;
}

// Recolours class-1 vertices other than x while some other colour is free
// at them. Returns false if w left class 1 (the conflict disappeared).
bool shrink_class_one(const Graph& g, Coloring& pi, Vertex x, Vertex w, int colors) {
    for (bool changed = true; changed;) {
        changed = false;
        for (Vertex z : pi.color_class(1)) {
            if (z == x) continue;
            std::uint64_t used = 0;
            for (Vertex u : g.neighbors(z))
                if (u != x) used |= std::uint64_t{1} << pi[u];
            for (int c = 2; c <= colors; ++c)
                if (!(used >> c & 1)) {
                    pi.color[z] = c;
                    changed = true;
                    break;
                }
        }
    }
    return pi[w] == 1;
}

struct Group {
    std::vector<Vertex> members;  // z's sharing a block
    int block = -1;
    VertexSet V;
};

// Simultaneous swap in three checked states: each z takes its group's
// transversal colour with the transversal vertices uncoloured, then those
// take colour 1, then x does.
void swap_in(Run& run, const Graph& g, Coloring& pi, Vertex x, const std::vector<Group>& groups,
             const std::vector<Vertex>& chosen) {
    Coloring state = pi;
    state.color[x] = 0;
    for (std::size_t j = 0; j < groups.size(); ++j) {
        const int c = pi[chosen[j]];
        for (Vertex z : groups[j].members) state.color[z] = c;
        state.color[chosen[j]] = 0;
    }
    const bool s1 = is_proper(g, state);
    for (Vertex v : chosen) state.color[v] = 1;
    const bool s2 = is_proper(g, state);
    state.color[x] = 1;
    const bool s3 = is_proper_total(g, state);
    run.log("swap", {{"recoloured", groups.size()}, {"states_proper", {s1, s2, s3}}});
    if (!(s1 && s2 && s3))
        throw FalsificationError("recolour swap broke properness; graph6=" + serialize_graph6(g) +
                                 " x=" + std::to_string(x));
    pi = state;
}

json set_json(VertexSet s) { return s.to_vector(); }

void fallback(Run& run, const Graph& g, const std::string& stage, const std::string& why) {
    run.log(stage, {{"fallback", why}});
    run.out.fallback = true;
    run.out.stage = stage;
    run.out.coloring = find_coloring(g, run.out.colors);
}

void finish(Run& run, const Graph& g) {
    if (run.out.coloring) {
        run.out.coloring->num_colors = run.out.colors;
        if (!is_proper_total(g, *run.out.coloring))
            throw FalsificationError("emitted colouring is not proper; graph6=" + serialize_graph6(g));
    }
}

// Shared tail of both procedures once the core, its decomposition, x, w
// and a colouring pi of core - xw with pi(x) = pi(w) = 1 are fixed.
enum class Kind { DeltaMinusOne, General };

struct CoreStep {
    const Graph& core;
    const CliqueDecomposition& dec;
    Vertex x;
    Vertex w;
    int colors;
    int k;
    int delta;
};

// Returns the colouring of the core or nullopt after falling back.
std::optional<Coloring> recolor_core(Run& run, const CoreStep& s, Kind kind, Coloring pi) {
    const Graph& g = s.core;
    if (!shrink_class_one(g, pi, s.x, s.w, s.colors)) {
        run.log("normalization", {{"class_one", pi.color_class(1).size()}, {"resolved", true}});
        run.out.stage = "normalization";
        return pi;
    }
    Coloring minus_x = pi;
    minus_x.color[s.x] = 0;
    const VertexSet Z = minus_x.color_class(1);
    for (Vertex z : Z) {
        std::uint64_t seen = 0;
        for (Vertex u : g.neighbors(z))
            if (minus_x[u]) seen |= std::uint64_t{1} << minus_x[u];
        for (int c = 2; c <= s.colors; ++c)
            if (!(seen >> c & 1))
                throw FalsificationError("class-1 vertex " + std::to_string(z) + " misses colour " + std::to_string(c) +
                                         " after shrinking");
    }
    const int bx = s.dec.block_of(s.x);
    run.log("normalization", {{"Z", set_json(Z)}, {"resolved", false}});
    if (Z.intersects(s.dec.blocks[bx].D)) {
        fallback(run, g, "normalization", "Z meets D_1 - x");
        return std::nullopt;
    }

    std::map<int, Group> by_block;
    for (Vertex z : Z) {
        int b = s.dec.block_of(z);
        if (b < 0) {
            fallback(run, g, "zov", "vertex " + std::to_string(z) + " in no block");
            return std::nullopt;
        }
        by_block[b].block = b;
        by_block[b].members.push_back(z);
    }
    std::vector<Group> groups;
    json zov = json::array();
    for (auto& [b, grp] : by_block) {
        const auto& blk = s.dec.blocks[b];
        const std::size_t cap = kind == Kind::DeltaMinusOne ? 2 : static_cast<std::size_t>(s.k + 1);
        if (grp.members.size() > cap) {
            fallback(run, g, "zov", std::to_string(grp.members.size()) + " class-1 vertices in block " + std::to_string(b));
            return std::nullopt;
        }
        VertexSet v = (kind == Kind::DeltaMinusOne && grp.members.size() == 2) ? blk.K : blk.C;
        json os = json::array();
        for (Vertex z : grp.members) {
            VertexSet oz = compute_Oz(g, minus_x, z);
            os.push_back(set_json(oz));
            v &= oz;
        }
        grp.V = v;
        zov.push_back({{"block", b}, {"Z", grp.members}, {"O", os}, {"V", set_json(v)}});
        if (v.empty()) {
            run.log("zov", {{"groups", zov}});
            fallback(run, g, "zov", "empty V for block " + std::to_string(b));
            return std::nullopt;
        }
        groups.push_back(grp);
    }
    run.log("zov", {{"groups", zov}});

    VertexSet all;
    for (const auto& grp : groups) all |= grp.V;
    auto h = induced_subgraph(g, all);
    std::vector<int> local(g.order(), -1);
    for (Vertex i = 0; i < h.graph.order(); ++i) local[h.to_parent[i]] = i;
    std::vector<VertexSet> blocks;
    for (const auto& grp : groups) {
        VertexSet b;
        for (Vertex v : grp.V) b.insert(local[v]);
        blocks.push_back(b);
    }
    // edges inside a block never matter to a transversal
    Graph cross(h.graph.order());
    for (const Edge& e : h.graph.edges()) {
        bool same = false;
        for (auto b : blocks) same = same || (b.contains(e.u) && b.contains(e.v));
        if (!same) cross.add_edge(e.u, e.v);
    }
    VertexPartition part(cross.order(), blocks);
    VertexSet s_local;
    for (Vertex v : g.neighbors(s.x) & all) s_local.insert(local[v]);

    GuardedTransversal t;
    if (kind == Kind::DeltaMinusOne)
        t = find_transversal_avoiding(cross, part, s_local, Rational(s.delta, 3) - 1);
    else
        t = find_transversal_with_anchor(cross, part, s_local);
    run.log("transversal", {{"blocks", blocks.size()},
                            {"S", set_json(g.neighbors(s.x) & all)},
                            {"hypotheses_hold", t.hypotheses_hold},
                            {"violated", t.violated},
                            {"found", t.transversal.has_value()}});
    if (!t.hypotheses_hold) run.flag("transversal hypothesis: " + t.violated);
    if (!t.transversal) {
        fallback(run, g, "transversal", "no transversal avoiding N(x)");
        return std::nullopt;
    }
    std::vector<Vertex> chosen;
    for (Vertex v : *t.transversal) chosen.push_back(h.to_parent[v]);
    swap_in(run, g, pi, s.x, groups, chosen);
    run.out.stage = "complete";
    return pi;
}

std::optional<std::pair<Vertex, Vertex>> pick_xw(const Graph& g, const CliqueDecomposition& d) {
    for (const auto& b : d.blocks)
        for (Vertex x : b.K) {
            VertexSet out = g.neighbors(x) - b.D;
            if (!out.empty()) return std::make_pair(x, out.first());
        }
    return std::nullopt;
}

// Common driver: peel, decompose, pick xw, colour core - xw, recolour,
// extend. `decompose` builds the decomposition of the core.
template <class Decompose>
void drive(Run& run, const Graph& g, Kind kind, int k, int delta, const RecolorOptions& options,
           Decompose&& decompose) {
    const int colors = run.out.colors;
    std::vector<Vertex> removed;
    VertexSet core_set = peel(g, colors, removed);
    run.log("reduction", {{"core", set_json(core_set)}, {"peeled", removed}});
    std::vector<int> color(g.order(), 0);
    if (core_set.empty()) {
        run.out.stage = "reduction";
        extend_greedily(g, color, removed, colors);
        run.out.coloring = Coloring{color, colors};
        return;
    }
    auto core = induced_subgraph(g, core_set);
    const Graph& cg = core.graph;
    auto lift_and_extend = [&](const Coloring& local) {
        for (Vertex v = 0; v < cg.order(); ++v) color[core.to_parent[v]] = local.color[v];
        extend_greedily(g, color, removed, colors);
        run.out.coloring = Coloring{color, colors};
    };

    if (cg.max_degree() < delta) {
        // Brooks: a core of smaller maximum degree is coloured directly
        run.log("brooks", {{"core_delta", cg.max_degree()}});
        run.out.fallback = true;
        run.out.stage = "brooks";
        auto c = find_coloring(cg, colors);
        if (c) lift_and_extend(*c);
        return;
    }

    std::optional<CliqueDecomposition> dec;
    try {
        dec = decompose(cg);
    } catch (const Error& e) {
        run.log("decomposition", {{"error", e.what()}});
        run.out.fallback = true;
        run.out.stage = "decomposition";
        run.out.coloring = find_coloring(g, colors);
        return;
    }
    run.log("decomposition", json::parse(decomposition_to_json(*dec)));
    for (const auto& f : dec->flags) run.flag("decomposition: " + f);
    if (dec->covered() != cg.vertices()) {
        fallback(run, g, "decomposition", "some core vertex lies in no big clique");
        return;
    }
    auto xw = pick_xw(cg, *dec);
    if (!xw) {
        fallback(run, g, "critical-edge", "no x in K_i with a neighbour outside D_i");
        return;
    }
    auto [x, w] = *xw;
    Graph cut = cg;
    cut.remove_edge(x, w);
    json ce = {{"x", core.to_parent[x]}, {"w", core.to_parent[w]}};
    if (options.certify_critical) {
        const int chi_core = chromatic_number(cg, options.limits).chi;
        const int chi_cut = chromatic_number(cut, options.limits).chi;
        ce["chi_core"] = chi_core;
        ce["chi_cut"] = chi_cut;
        ce["critical"] = chi_cut < chi_core;
    }
    std::vector<int> pre(cg.order(), 0);
    pre[x] = pre[w] = 1;
    auto pi = find_coloring(cut, colors, pre);
    ce["conflict"] = pi.has_value();
    run.log("critical-edge", ce);
    if (!pi) {
        // no colouring of core - xw gives x and w the same colour
        auto any = find_coloring(cut, colors);
        if (!any) {
            fallback(run, g, "critical-edge", "core - xw not colourable");
            return;
        }
        run.out.stage = "no-conflict";
        lift_and_extend(*any);
        return;
    }
    CoreStep step{cg, *dec, x, w, colors, k, delta};
    auto done = recolor_core(run, step, kind, *pi);
    if (!done) {
        // fallback() coloured the core; redo on the whole graph
        run.out.coloring = find_coloring(g, colors);
        return;
    }
    lift_and_extend(*done);
}

}  // namespace

RecolorOutcome color_delta_minus_1(const Graph& g, int k, const RecolorOptions& options) {
    Run run;
    const int delta = g.max_degree();
    if (k < 0) k = delta;
    if (k < 2) throw InvalidArgument("color_delta_minus_1: k must be at least 2");
    run.out.colors = k - 1;
    const int omega = g.order() ? clique_number(g) : 0;
    const int r = g.order() ? rho(g) : 0;
    if (k < 9) run.flag("k = " + std::to_string(k) + " < 9");
    if (delta > k) run.flag("Delta = " + std::to_string(delta) + " > k");
    if (omega >= k) run.flag("omega = " + std::to_string(omega) + " >= k");
    if (Rational(r) > Rational(k, 3) - 2) run.flag("rho = " + std::to_string(r) + " > k/3 - 2");
    run.out.hypotheses_hold = run.out.flags.empty();
    run.log("hypotheses", {{"k", k}, {"Delta", delta}, {"omega", omega}, {"rho", r}, {"flags", run.out.flags}});
    if (!run.out.hypotheses_hold) {
        fallback(run, g, "hypotheses", "hypotheses unmet");
        finish(run, g);
        return run.out;
    }
    const int t = static_cast<int>(ceil_of(Rational(2 * k, 3) + 1));
    drive(run, g, Kind::DeltaMinusOne, 1, k, options, [&](const Graph& core) {
        DecompositionOptions o;
        o.assume_no_dk_choosable = true;
        return decompose_k1(core, t, o);
    });
    finish(run, g);
    return run.out;
}

RecolorOutcome color_delta_minus_k(const Graph& g, int k, int gamma, const RecolorOptions& options) {
    Run run;
    if (k < 1) throw InvalidArgument("color_delta_minus_k: k must be at least 1");
    const int delta = g.max_degree();
    if (gamma < 0) gamma = delta;
    if (gamma - k < 1) throw InvalidArgument("color_delta_minus_k: gamma - k must be positive");
    run.out.colors = gamma - k;
    const int omega = g.order() ? clique_number(g) : 0;
    const int r = g.order() ? rho(g) : 0;
    const Rational up = threshold_U_prime(k, omega, gamma);
    if (delta > gamma) run.flag("Delta = " + std::to_string(delta) + " > gamma");
    if (omega > gamma - 2 * k) run.flag("omega = " + std::to_string(omega) + " > gamma - 2k");
    if (Rational(r) > Rational(gamma - k) - up)
        run.flag("rho = " + std::to_string(r) + " > gamma - k - U' = " + to_string(Rational(gamma - k) - up));
    run.out.hypotheses_hold = run.out.flags.empty();
    run.log("hypotheses", {{"k", k}, {"gamma", gamma}, {"Delta", delta}, {"omega", omega}, {"rho", r},
                           {"U_prime", to_string(up)}, {"flags", run.out.flags}});
    if (!run.out.hypotheses_hold) {
        fallback(run, g, "hypotheses", "hypotheses unmet");
        finish(run, g);
        return run.out;
    }
    while (delta < gamma && k >= 1) {
        --gamma;
        --k;
        run.log("gamma-reduction", {{"gamma", gamma}, {"k", k}});
    }
    if (k == 0) {
        run.log("brooks", {{"gamma", gamma}});
        run.out.fallback = true;
        run.out.stage = "brooks";
        run.out.coloring = find_coloring(g, run.out.colors);
        finish(run, g);
        return run.out;
    }
    const Rational t = threshold_U_prime(k, omega, gamma);
    drive(run, g, Kind::General, k, gamma, options, [&](const Graph& core) {
        DecompositionOptions o;
        o.assume_no_dk_choosable = true;
        return decompose_general(core, k, t, o);
    });
    finish(run, g);
    return run.out;
}

OnesiesReport onesies_subgraph(const Graph& g, Vertex v, int k, const OracleLimits& limits) {
    if (v < 0 || v >= g.order()) throw InvalidArgument("onesies_subgraph: vertex out of range");
    if (k < 0) throw InvalidArgument("onesies_subgraph: k must be nonnegative");
    OnesiesReport r;
    r.v = v;
    r.k = k;
    r.n = g.order();
    r.delta = g.max_degree();
    const int chi = chromatic_number(g, limits).chi;
    if (chi != r.delta + 1 - k)
        throw HypothesisError("onesies_subgraph: chi = " + std::to_string(chi) + " but Delta + 1 - k = " +
                              std::to_string(r.delta + 1 - k));
    if (!is_vertex_critical(g, limits)) throw HypothesisError("onesies_subgraph: graph is not vertex-critical");
    auto minus = induced_subgraph(g, g.vertices() - VertexSet::single(v));
    auto c = find_coloring(minus.graph, r.delta - k);
    if (!c) throw FalsificationError("onesies_subgraph: g - v not (Delta-k)-colourable despite criticality");
    r.pi = lift(minus, *c, g.order());
    r.pi.num_colors = r.delta - k;
    r.alpha = independence_number(g);
    r.h = compute_Oz(g, r.pi, v);
    auto h = induced_subgraph(g, r.h).graph;
    r.h_order = h.order();
    r.h_min_degree = h.order() ? h.min_degree() : 0;
    r.h_size = h.size();
    const int m = r.h_order;
    r.bound1 = r.delta - 2 * k;
    r.bound2 = m - (k + 1) * (r.alpha - 1) - 1;
    r.bound3 = m * (m - (k + 2)) - (k + 1) * (r.n + 2 * k - (r.delta + 1));
    r.bound3_corrected = m * (m - (k + 2)) - (k + 1) * (r.n + 2 * k - (2 * r.delta + 1));
    r.holds1 = m >= r.bound1;
    r.holds2 = m == 0 || r.h_min_degree >= r.bound2;
    r.holds3 = r.h_size >= r.bound3;
    r.holds3_corrected = 2 * r.h_size >= r.bound3_corrected;
    return r;
}

std::string to_string(IrregularOutcome::Kind kind) {
    switch (kind) {
        case IrregularOutcome::Kind::Clique: return "clique";
        case IrregularOutcome::Kind::IrregularCritical: return "irregular-critical";
        case IrregularOutcome::Kind::NotFound: return "not-found";
        case IrregularOutcome::Kind::HypothesisUnmet: return "hypothesis-unmet";
    }
    return "unknown";
}

namespace {

// Largest independent T of h - v (v excluded) with the admissibility
// condition on N(v) and chi(h - v - T) <= colors - 1. Ties broken
// lexicographically.
std::optional<VertexSet> largest_class(const Graph& h, Vertex v, bool high, int colors, const OracleLimits& limits) {
    VertexSet pool = h.vertices() - VertexSet::single(v);
    std::vector<VertexSet> sets;
    std::function<void(VertexSet, VertexSet)> rec = [&](VertexSet chosen, VertexSet cand) {
        if (!chosen.empty()) sets.push_back(chosen);
        for (Vertex u : cand) {
            VertexSet later(cand.bits() & ~((std::uint64_t{2} << u) - 1));
            rec(chosen | VertexSet::single(u), later - h.neighbors(u));
        }
    };
    rec(VertexSet{}, pool);
    std::stable_sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
        if (a.size() != b.size()) return a.size() > b.size();
        auto x = a.to_vector(), y = b.to_vector();
        return x < y;
    });
    for (VertexSet t : sets) {
        if (high && (h.neighbors(v) & t).size() != 2) continue;
        auto rest = induced_subgraph(h, pool - t).graph;
        if (rest.order() == 0 || chromatic_number(rest, limits).chi <= colors - 1) return t;
    }
    return std::nullopt;
}

}  // namespace

IrregularOutcome irregular_reduction(const Graph& g, int k, const OracleLimits& limits) {
    IrregularOutcome out;
    const int chi = chromatic_number(g, limits).chi;
    if (g.max_degree() != k || chi < k) {
        out.kind = IrregularOutcome::Kind::HypothesisUnmet;
        out.detail = "need chi >= Delta = k; chi = " + std::to_string(chi) + ", Delta = " + std::to_string(g.max_degree());
        return out;
    }
    if (k < 9) out.flags.push_back("k = " + std::to_string(k) + " < 9");
    VertexSet big = maximum_clique(g);
    if (big.size() >= k) {
        out.kind = IrregularOutcome::Kind::Clique;
        VertexSet c;
        for (Vertex v : big) {
            if (c.size() == k) break;
            c.insert(v);
        }
        out.vertices = c;
        out.detail = "K_" + std::to_string(k);
        return out;
    }
    auto crit = vertex_critical_subgraph(g, limits);
    const Graph& G = crit.graph;
    const int chiG = chromatic_number(G, limits).chi;
    if (chiG != k || G.max_degree() != k) {
        out.detail = "critical subgraph has chi = " + std::to_string(chiG) + ", Delta = " + std::to_string(G.max_degree());
        return out;
    }
    std::optional<Vertex> v;
    for (Vertex u = 0; u < G.order() && !v; ++u)
        if (local_clique_number(G, u) < k - 1) v = u;
    if (!v) {
        out.detail = "every vertex of the critical subgraph lies in a (k-1)-clique";
        return out;
    }
    const bool high = G.degree(*v) == k;
    auto T = largest_class(G, *v, high, k - 1, limits);
    if (!T) {
        out.detail = "no admissible colour class for v = " + std::to_string(crit.to_parent[*v]);
        return out;
    }
    auto H = induced_subgraph(G, G.vertices() - *T);
    Vertex hv = -1;
    for (Vertex i = 0; i < H.graph.order(); ++i)
        if (H.to_parent[i] == *v) hv = i;
    auto Hp = vertex_critical_subgraph(H.graph, limits);
    const Graph& hp = Hp.graph;
    VertexSet in_g;
    bool has_v = false;
    for (Vertex i = 0; i < hp.order(); ++i) {
        Vertex in_h = Hp.to_parent[i];
        has_v = has_v || in_h == hv;
        in_g.insert(crit.to_parent[H.to_parent[in_h]]);
    }
    const int chiH = chromatic_number(hp, limits).chi;
    out.vertices = in_g;
    if (!has_v || chiH != k - 1 || hp.max_degree() != k - 1 || hp.is_regular()) {
        out.detail = "H' has chi = " + std::to_string(chiH) + ", Delta = " + std::to_string(hp.max_degree()) +
                     (hp.is_regular() ? ", regular" : ", irregular") + (has_v ? "" : ", misses v");
        return out;
    }
    out.kind = IrregularOutcome::Kind::IrregularCritical;
    out.detail = "|H'| = " + std::to_string(hp.order()) + ", chi = Delta = " + std::to_string(k - 1);
    return out;
}

}  // namespace gcol
