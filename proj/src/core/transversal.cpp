#include "gcol/transversal.hpp"

#include <algorithm>
#include <sstream>

#include "gcol/error.hpp"

namespace gcol {

VertexPartition::VertexPartition(int n, std::vector<VertexSet> blocks)
    : blocks_(std::move(blocks)), block_of_(n, -1) {
    if (n < 0 || n > Graph::kMaxOrder) throw InvalidArgument("partition: bad order");
    for (int i = 0; i < size(); ++i) {
        if (blocks_[i].empty()) throw InvalidArgument("partition: empty block " + std::to_string(i));
        if (!blocks_[i].is_subset_of(VertexSet::range(n)))
            throw InvalidArgument("partition: block " + std::to_string(i) + " has a vertex out of range");
        for (Vertex v : blocks_[i]) {
            if (block_of_[v] >= 0)
                throw InvalidArgument("partition: vertex " + std::to_string(v) + " in two blocks");
            block_of_[v] = i;
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (block_of_[v] < 0) throw InvalidArgument("partition: vertex " + std::to_string(v) + " uncovered");
}

VertexPartition parse_partition(std::string_view text, int n) {
    std::vector<VertexSet> blocks;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        VertexSet b;
        bool any = false;
        while (ls >> tok) {
            std::size_t used = 0;
            int v = -1;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size() || v < 0 || v >= n || v >= Graph::kMaxOrder)
                throw ParseError("partition line " + std::to_string(lineno) + ": bad vertex '" + tok + "'");
            if (b.contains(v)) throw ParseError("partition line " + std::to_string(lineno) + ": repeated vertex");
            b.insert(v);
            any = true;
        }
        if (any) blocks.push_back(b);
    }
    try {
        return VertexPartition(n, std::move(blocks));
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    }
}

std::string serialize_partition(const VertexPartition& p) {
    std::ostringstream os;
    for (VertexSet b : p.blocks()) {
        bool first = true;
        for (Vertex v : b) {
            os << (first ? "" : " ") << v;
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

namespace {

// Depth-first over blocks in index order with forward checking; vertices in
// ascending order, so the first hit is the lexicographically least.
bool search_rec(const Graph& g, std::vector<VertexSet>& avail, std::size_t i, std::vector<Vertex>& out) {
    if (i == avail.size()) return true;
    for (Vertex v : avail[i]) {
        const VertexSet nb = g.neighbors(v);
        std::vector<VertexSet> saved(avail.begin() + static_cast<std::ptrdiff_t>(i) + 1, avail.end());
        bool dead = false;
        for (std::size_t j = i + 1; j < avail.size(); ++j) {
            avail[j] -= nb;
            if (avail[j].empty()) dead = true;
        }
        if (!dead) {
            out.push_back(v);
            if (search_rec(g, avail, i + 1, out)) return true;
            out.pop_back();
        }
        std::copy(saved.begin(), saved.end(), avail.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    }
    return false;
}

std::optional<std::vector<Vertex>> search(const Graph& g, std::vector<VertexSet> allowed) {
    for (VertexSet b : allowed)
        if (b.empty()) return std::nullopt;
    std::vector<Vertex> out;
    if (search_rec(g, allowed, 0, out)) return out;
    return std::nullopt;
}

Graph without_block_edges(const Graph& g, const std::vector<VertexSet>& blocks) {
    Graph h = g;
    for (VertexSet b : blocks)
        for (const Edge& e : g.edges())
            if (b.contains(e.u) && b.contains(e.v)) h.remove_edge(e.u, e.v);
    return h;
}

// One lexicographic pass suffices: an edge kept because its removal created
// a transversal stays necessary after later removals.
Graph edge_minimize(Graph q, const std::vector<VertexSet>& blocks) {
    for (const Edge& e : q.edges()) {
        q.remove_edge(e.u, e.v);
        if (search(q, blocks)) q.add_edge(e.u, e.v);
    }
    return q;
}

int block_containing(const std::vector<VertexSet>& blocks, Vertex v) {
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].contains(v)) return static_cast<int>(i);
    throw FalsificationError("certificate construction: vertex outside every block");
}

struct Built {
    std::vector<int> labels;
    EdgeList matching;
};

Built build(const Graph& q, const std::vector<VertexSet>& blocks, const std::vector<std::vector<int>>& labels,
            Vertex x, Vertex y) {
    Graph minus = q;
    minus.remove_edge(x, y);
    const auto t = search(minus, blocks);
    if (!t) throw FalsificationError("certificate construction: graph is not edge-minimal");
    const int bx = block_containing(blocks, x);
    const int by = block_containing(blocks, y);
    const VertexSet removed = q.neighbors(x) | q.neighbors(y);

    Graph h = q;
    for (Vertex v : removed)
        for (Vertex u : q.neighbors(v)) h.remove_edge(u, v);
    for (Vertex u : blocks[bx])
        for (Vertex v : blocks[by])
            if (h.adjacent(u, v)) h.remove_edge(u, v);

    std::vector<VertexSet> nb;
    std::vector<std::vector<int>> nl;
    int merged = -1;
    for (int i = 0; i < static_cast<int>(blocks.size()); ++i) {
        if (i == by) continue;
        if (i == bx) {
            merged = static_cast<int>(nb.size());
            nb.push_back((blocks[bx] | blocks[by]) - removed);
            auto l = labels[bx];
            l.insert(l.end(), labels[by].begin(), labels[by].end());
            nl.push_back(l);
        } else {
            nb.push_back(blocks[i] - removed);
            nl.push_back(labels[i]);
        }
    }
    Built out;
    if (nb[merged].empty()) {
        out.labels = nl[merged];
        out.matching.push_back({std::min(x, y), std::max(x, y)});
        return out;
    }
    for (VertexSet b : nb)
        if (b.empty()) throw FalsificationError("certificate construction: block emptied by N({x,y})");
    if (search(h, nb)) throw FalsificationError("certificate construction: reduced instance has a transversal");
    const Graph hm = edge_minimize(h, nb);
    std::optional<Edge> zw;
    for (const Edge& e : hm.edges())
        if (nb[merged].contains(e.u) || nb[merged].contains(e.v)) {
            zw = e;
            break;
        }
    if (!zw) throw FalsificationError("certificate construction: merged block has no edge");
    const Vertex z = nb[merged].contains(zw->u) ? zw->u : zw->v;
    const Vertex w = z == zw->u ? zw->v : zw->u;
    out = build(hm, nb, nl, z, w);
    out.matching.push_back({std::min(x, y), std::max(x, y)});
    out.labels.insert(out.labels.end(), nl[merged].begin(), nl[merged].end());
    std::sort(out.labels.begin(), out.labels.end());
    out.labels.erase(std::unique(out.labels.begin(), out.labels.end()), out.labels.end());
    return out;
}

}  // namespace

TransversalOutcome find_independent_transversal(const Graph& g, const VertexPartition& p) {
    if (g.order() != p.order()) throw InvalidArgument("partition order does not match graph order");
    TransversalOutcome out;
    if (auto t = search(g, p.blocks())) {
        out.transversal = std::move(t);
        return out;
    }
    const Graph q = edge_minimize(without_block_edges(g, p.blocks()), p.blocks());
    const auto edges = q.edges();
    if (edges.empty()) throw FalsificationError("no transversal yet the edge-minimal graph is edgeless");
    std::vector<std::vector<int>> labels(p.size());
    for (int i = 0; i < p.size(); ++i) labels[i] = {i};
    Built b = build(q, p.blocks(), labels, edges[0].u, edges[0].v);
    std::sort(b.matching.begin(), b.matching.end());
    std::sort(b.labels.begin(), b.labels.end());
    out.certificate = DominationCertificate{b.labels, b.matching, edges[0], q};
    return out;
}

bool naive_transversal_exists(const Graph& g, const VertexPartition& p) {
    std::vector<std::vector<Vertex>> bl;
    for (VertexSet b : p.blocks()) bl.push_back(b.to_vector());
    std::vector<std::size_t> idx(bl.size(), 0);
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < bl.size() && ok; ++i)
            for (std::size_t j = i + 1; j < bl.size() && ok; ++j)
                if (g.adjacent(bl[i][idx[i]], bl[j][idx[j]])) ok = false;
        if (ok) return true;
        std::size_t i = 0;
        while (i < bl.size() && ++idx[i] == bl[i].size()) idx[i++] = 0;
        if (i == bl.size()) return false;
    }
}

bool verify_transversal(const Graph& g, const VertexPartition& p, const std::vector<Vertex>& t) {
    if (static_cast<int>(t.size()) != p.size()) return false;
    for (int i = 0; i < p.size(); ++i) {
        if (t[i] < 0 || t[i] >= g.order() || p.block_of(t[i]) != i) return false;
        for (int j = 0; j < i; ++j)
            if (g.adjacent(t[i], t[j])) return false;
    }
    return true;
}

bool verify_certificate(const Graph& g, const VertexPartition& p, const DominationCertificate& cert) {
    const Graph& host = cert.host ? *cert.host : g;
    if (host.order() != g.order() || p.order() != g.order()) return false;
    for (const Edge& e : host.edges())
        if (!g.adjacent(e.u, e.v)) return false;
    if (cert.blocks.empty()) return false;
    VertexSet u;
    for (std::size_t i = 0; i < cert.blocks.size(); ++i) {
        const int b = cert.blocks[i];
        if (b < 0 || b >= p.size()) return false;
        if (i > 0 && cert.blocks[i - 1] >= b) return false;
        u |= p.block(b);
    }
    // matching edges in host[U], root among them
    VertexSet ends;
    bool root_seen = false;
    for (const Edge& e : cert.matching) {
        if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() || e.u == e.v) return false;
        if (!host.adjacent(e.u, e.v) || !u.contains(e.u) || !u.contains(e.v)) return false;
        if (ends.contains(e.u) || ends.contains(e.v)) return false;
        ends.insert(e.u);
        ends.insert(e.v);
        const Edge n{std::min(e.u, e.v), std::max(e.u, e.v)};
        if (n == Edge{std::min(cert.root.u, cert.root.v), std::max(cert.root.u, cert.root.v)}) root_seen = true;
    }
    if (!root_seen) return false;
    // induced: the only host edges among matched vertices are the matching
    if (edges_within(host, ends) != static_cast<int>(cert.matching.size())) return false;
    // total domination of host[U]
    for (Vertex v : u)
        if (!host.neighbors(v).intersects(ends)) return false;
    // block multigraph is a simple tree
    if (cert.matching.size() + 1 != cert.blocks.size()) return false;
    std::vector<int> parent(p.size());
    for (int i = 0; i < p.size(); ++i) parent[i] = i;
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const Edge& e : cert.matching) {
        const int a = find(p.block_of(e.u));
        const int b = find(p.block_of(e.v));
        if (a == b) return false;  // loop, parallel edge or cycle
        parent[a] = b;
    }
    return true;
}

namespace {

std::vector<VertexSet> minus_set(const VertexPartition& p, VertexSet s) {
    std::vector<VertexSet> out;
    for (VertexSet b : p.blocks()) out.push_back(b - s);
    return out;
}

std::string lopsided_degree_violation(const Graph& g, const VertexPartition& p, const Rational& t) {
    if (t < Rational(1)) return "t < 1";
    for (int i = 0; i < p.size(); ++i)
        for (Vertex v : p.block(i)) {
            const Rational d(g.degree(v));
            if (d > t || d > Rational(p.block(i).size()) - t)
                return "d(" + std::to_string(v) + ") exceeds min(t, |V_" + std::to_string(i) + "| - t)";
        }
    return "";
}

}  // namespace

GuardedTransversal find_transversal_avoiding(const Graph& g, const VertexPartition& p, VertexSet s,
                                             const Rational& t) {
    if (g.order() != p.order()) throw InvalidArgument("partition order does not match graph order");
    GuardedTransversal out;
    out.violated = lopsided_degree_violation(g, p, t);
    if (out.violated.empty()) {
        for (VertexSet b : p.blocks())
            if (s.size() >= b.size()) {
                out.violated = "|S| not below the smallest block";
                break;
            }
    }
    out.hypotheses_hold = out.violated.empty();
    out.transversal = search(g, minus_set(p, s));
    return out;
}

GuardedTransversal find_transversal_avoiding_weak(const Graph& g, const VertexPartition& p, VertexSet s,
                                                  const Rational& t) {
    if (g.order() != p.order()) throw InvalidArgument("partition order does not match graph order");
    GuardedTransversal out;
    out.violated = lopsided_degree_violation(g, p, t);
    if (out.violated.empty()) {
        std::vector<int> idx(p.size());
        for (int i = 0; i < p.size(); ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(),
                         [&](int a, int b) { return p.block(a).size() < p.block(b).size(); });
        if (p.size() >= 2 && s.size() >= p.block(idx[1]).size())
            out.violated = "|S| not below the second smallest block";
        else if (p.block(idx[0]).is_subset_of(s))
            out.violated = "smallest block inside S";
    }
    out.hypotheses_hold = out.violated.empty();
    out.transversal = search(g, minus_set(p, s));
    return out;
}

GuardedTransversal find_transversal_with_anchor(const Graph& h, const VertexPartition& p,
                                                VertexSet x_neighbors, int degree_bound) {
    if (h.order() != p.order()) throw InvalidArgument("partition order does not match graph order");
    const int d = degree_bound < 0 ? h.max_degree() : degree_bound;
    GuardedTransversal out;
    if (d < h.max_degree())
        out.violated = "degree bound below Delta(H)";
    else if (x_neighbors.size() >= 2 * d)
        out.violated = "anchor has at least 2*Delta neighbours";
    else
        for (int i = 0; i < p.size(); ++i)
            if (p.block(i).size() < 2 * d) {
                out.violated = "block " + std::to_string(i) + " smaller than 2*Delta";
                break;
            }
    out.hypotheses_hold = out.violated.empty();
    out.transversal = search(h, minus_set(p, x_neighbors));
    return out;
}

}  // namespace gcol
