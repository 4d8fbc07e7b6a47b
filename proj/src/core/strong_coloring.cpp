#include "gcol/strong_coloring.hpp"

#include <json.hpp>

#include "gcol/error.hpp"
#include "gcol/graph_io.hpp"

namespace gcol {

namespace {

bool block_bijective(const Coloring& c, const std::vector<VertexSet>& blocks, int r) {
    for (VertexSet b : blocks) {
        std::uint64_t seen = 0;
        for (Vertex v : b) {
            const int col = c.color[v];
            if (col < 1 || col > r) return false;
            const std::uint64_t bit = std::uint64_t{1} << (col - 1);
            if (seen & bit) return false;
            seen |= bit;
        }
    }
    return true;
}

}  // namespace

StrongColoringResult strong_color(const Graph& g, const VertexPartition& p, int r, bool trace) {
    if (g.order() != p.order()) throw InvalidArgument("partition order does not match graph order");
    const int delta = g.max_degree();
    if (r < 3 * delta)
        throw HypothesisError("strong_color: r = " + std::to_string(r) + " is below 3*Delta = " +
                              std::to_string(3 * delta));
    if (r < 1) throw InvalidArgument("strong_color: r must be positive");
    std::vector<VertexSet> blocks = p.blocks();
    int deficit = 0;
    for (VertexSet b : blocks) {
        if (b.size() > r) throw InvalidArgument("strong_color: block larger than r");
        deficit += r - b.size();
    }
    const int n = g.order();
    const int total = n + deficit;
    if (total > Graph::kMaxOrder) throw BoundExceeded("strong_color: padded order exceeds 64");

    std::size_t cursor = 0;
    for (Vertex v = n; v < total; ++v) {
        while (blocks[cursor % blocks.size()].size() >= r) ++cursor;
        blocks[cursor % blocks.size()].insert(v);
        ++cursor;
    }

    StrongColoringResult out;
    out.padded_partition = VertexPartition(total, blocks);
    out.padded_graph = Graph(total);
    for (const Edge& e : g.edges()) out.padded_graph.add_edge(e.u, e.v);

    Coloring pi{std::vector<int>(total, 0), r};
    for (VertexSet b : blocks) {
        int c = 1;
        for (Vertex v : b) pi.color[v] = c++;
    }
    const auto& part = out.padded_partition;
    Graph cur(total);
    for (const Edge& e : g.edges()) {
        cur.add_edge(e.u, e.v);
        if (pi[e.u] != pi[e.v]) continue;
        const Vertex x = e.u;
        const int c = pi[x];
        const int bx = part.block_of(x);

        std::vector<Vertex> zs;
        std::vector<VertexSet> ws;
        for (int i = 0; i < part.size(); ++i) {
            if (i == bx) continue;
            Vertex z = -1;
            for (Vertex v : part.block(i))
                if (pi[v] == c) z = v;
            std::uint64_t near = 0;
            for (Vertex u : cur.neighbors(z)) near |= std::uint64_t{1} << (pi[u] - 1);
            VertexSet w;
            for (Vertex v : part.block(i))
                if (!((near >> (pi[v] - 1)) & 1u)) w.insert(v);
            if (w.size() < 2 * delta)
                throw FalsificationError("strong_color: |W_i| = " + std::to_string(w.size()) +
                                         " below 2*Delta at edge " + std::to_string(e.u) + "-" +
                                         std::to_string(e.v));
            zs.push_back(z);
            ws.push_back(w);
        }
        VertexSet all;
        for (VertexSet w : ws) all |= w;
        const InducedSubgraph h = induced_subgraph(cur, all);
        std::vector<VertexSet> local(ws.size());
        for (int i = 0; i < h.graph.order(); ++i)
            for (std::size_t j = 0; j < ws.size(); ++j)
                if (ws[j].contains(h.to_parent[i])) local[j].insert(i);
        VertexSet anchor;
        for (int i = 0; i < h.graph.order(); ++i)
            if (cur.adjacent(x, h.to_parent[i])) anchor.insert(i);
        const auto found = find_transversal_with_anchor(h.graph, VertexPartition(h.graph.order(), local), anchor, delta);
        auto dump = [&]() {
            nlohmann::json j;
            j["graph"] = serialize_graph6(out.padded_graph);
            j["edge"] = {e.u, e.v};
            j["coloring"] = pi.color;
            j["z_list"] = zs;
            std::vector<int> sizes;
            for (VertexSet w : ws) sizes.push_back(w.size());
            j["W_sizes"] = sizes;
            return j;
        };
        if (!found.transversal)
            throw FalsificationError("strong_color: no anchored transversal (" +
                                     (found.hypotheses_hold ? std::string("hypotheses hold") : found.violated) +
                                     "): " + dump().dump());
        std::vector<Vertex> t;
        for (Vertex v : *found.transversal) t.push_back(h.to_parent[v]);
        Coloring zeta = pi;
        for (std::size_t i = 0; i < zs.size(); ++i) {
            zeta.color[zs[i]] = pi[t[i]];
            zeta.color[t[i]] = c;
        }
        if (!is_proper(cur, zeta) || !block_bijective(zeta, blocks, r))
            throw FalsificationError("strong_color: swap produced an invalid colouring: " + dump().dump());
        ++out.repairs;
        if (trace) {
            auto j = dump();
            j.erase("graph");
            j.erase("coloring");
            j["color"] = c;
            j["transversal"] = t;
            out.trace.push_back(j.dump());
        }
        pi = std::move(zeta);
    }
    out.padded = pi;
    out.coloring = Coloring{std::vector<int>(pi.color.begin(), pi.color.begin() + n), r};
    if (!verify_strong_coloring(g, p, r, out.coloring))
        throw FalsificationError("strong_color: final colouring fails verification");
    return out;
}

bool verify_strong_coloring(const Graph& g, const VertexPartition& p, int r, const Coloring& c) {
    if (static_cast<int>(c.color.size()) < g.order() || p.order() != g.order()) return false;
    Coloring base{std::vector<int>(c.color.begin(), c.color.begin() + g.order()), r};
    if (!is_proper(g, base)) return false;
    for (VertexSet b : p.blocks())
        if (b.size() > r) return false;
    return block_bijective(base, p.blocks(), r);
}

}  // namespace gcol
