#include "gcol/canonical.hpp"

#include <algorithm>

#include "gcol/graph_io.hpp"

namespace gcol {

namespace {

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;

// Splits cells by neighbour counts into each splitter cell until stable.
// Only structure drives the order of the new cells, so the result is
// label-invariant.
void refine(const Graph& g, Partition& p) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t w = 0; w < p.size() && !changed; ++w) {
            VertexSet splitter;
            for (Vertex v : p[w]) splitter.insert(v);
            for (std::size_t x = 0; x < p.size(); ++x) {
                if (p[x].size() < 2) continue;
                std::vector<std::pair<int, Vertex>> keyed;
                keyed.reserve(p[x].size());
                for (Vertex v : p[x]) keyed.push_back({(g.neighbors(v) & splitter).size(), v});
                std::sort(keyed.begin(), keyed.end());
                if (keyed.front().first == keyed.back().first) continue;
                Partition pieces;
                for (std::size_t i = 0; i < keyed.size(); ++i) {
                    if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
                    pieces.back().push_back(keyed[i].second);
                }
                p.erase(p.begin() + static_cast<std::ptrdiff_t>(x));
                p.insert(p.begin() + static_cast<std::ptrdiff_t>(x), pieces.begin(), pieces.end());
                changed = true;
                break;
            }
        }
    }
}

std::vector<std::uint64_t> code_of(const Graph& g, const std::vector<Vertex>& label) {
    const int n = g.order();
    std::vector<Vertex> at(n);
    for (Vertex v = 0; v < n; ++v) at[label[v]] = v;
    std::vector<std::uint64_t> code(n);
    for (int i = 0; i < n; ++i) {
        std::uint64_t row = 0;
        for (Vertex w : g.neighbors(at[i])) row |= std::uint64_t{1} << (63 - label[w]);
        code[i] = row;
    }
    return code;
}

struct Search {
    const Graph& g;
    std::vector<std::uint64_t> best_code;
    std::vector<Vertex> best_label;

    void run(Partition p) {
        refine(g, p);
        std::size_t target = p.size();
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i].size() > 1 && (target == p.size() || p[i].size() < p[target].size())) target = i;
        if (target == p.size()) {
            std::vector<Vertex> label(g.order());
            for (std::size_t i = 0; i < p.size(); ++i) label[p[i][0]] = static_cast<Vertex>(i);
            auto code = code_of(g, label);
            if (best_label.empty() || code > best_code) {
                best_code = std::move(code);
                best_label = std::move(label);
            }
            return;
        }
        for (Vertex v : p[target]) {
            Partition q = p;
            Cell rest;
            for (Vertex u : p[target])
                if (u != v) rest.push_back(u);
            q[target] = Cell{v};
            q.insert(q.begin() + static_cast<std::ptrdiff_t>(target) + 1, rest);
            run(std::move(q));
        }
    }
};

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g) {
    if (g.order() == 0) return {};
    Partition p(1);
    for (Vertex v = 0; v < g.order(); ++v) p[0].push_back(v);
    Search s{g, {}, {}};
    s.run(std::move(p));
    return s.best_label;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& new_label) {
    Graph out(g.order());
    for (const Edge& e : g.edges()) out.add_edge(new_label[e.u], new_label[e.v]);
    return out;
}

Graph canonical_form(const Graph& g) { return relabel(g, canonical_labeling(g)); }

std::string canonical_graph6(const Graph& g) { return serialize_graph6(canonical_form(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace gcol
