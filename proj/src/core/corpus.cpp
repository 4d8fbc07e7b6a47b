#include "gcol/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "gcol/canonical.hpp"
#include "gcol/error.hpp"
#include "gcol/graph_io.hpp"

namespace gcol {

std::vector<Graph> all_graphs(int n) {
    if (n < 0) throw InvalidArgument("all_graphs: negative order");
    if (n > 10) throw BoundExceeded("all_graphs: exhaustive generation capped at order 10");
    if (n == 0) return {Graph(0)};
    std::map<std::string, Graph> seen;
    for (const Graph& base : all_graphs(n - 1)) {
        for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (n - 1)); ++nb) {
            Graph g(n);
            for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
            for (Vertex v : VertexSet(nb)) g.add_edge(v, n - 1);
            Graph c = canonical_form(g);
            seen.emplace(serialize_graph6(c), std::move(c));
        }
    }
    std::vector<Graph> out;
    out.reserve(seen.size());
    for (auto& [code, g] : seen) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> all_graphs_up_to(int max_n) {
    std::vector<Graph> out;
    for (int n = 0; n <= max_n; ++n) {
        auto level = all_graphs(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::uint64_t known_graph_count(int n) {
    static constexpr std::uint64_t counts[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168};
    if (n < 0 || n > 10) throw InvalidArgument("known_graph_count: order outside 0..10");
    return counts[n];
}

Graph random_gnp(int n, int percent, std::mt19937_64& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < percent) g.add_edge(u, v);
    return g;
}

namespace {

int suffix_number(const std::string& name, std::size_t from) {
    if (from >= name.size()) throw InvalidArgument("unknown graph family '" + name + "'");
    for (std::size_t i = from; i < name.size(); ++i)
        if (name[i] < '0' || name[i] > '9') throw InvalidArgument("unknown graph family '" + name + "'");
    return std::stoi(name.substr(from));
}

}  // namespace

Graph named_graph(const std::string& name) {
    if (name == "M8") return blowup_cycle(5, 3);
    if (name == "petersen") return petersen_graph();
    if (name.rfind("CP", 0) == 0) {
        const int m = suffix_number(name, 2);
        Graph g = complete_graph(2 * m);
        for (int i = 0; i < m; ++i) g.remove_edge(2 * i, 2 * i + 1);
        return g;
    }
    if (name.empty()) throw InvalidArgument("empty family name");
    const int k = suffix_number(name, 1);
    switch (name[0]) {
        case 'K': return complete_graph(k);
        case 'C': return cycle_graph(k);
        case 'E': return empty_graph(k);
        case 'P': return path_graph(k);
        default: break;
    }
    throw InvalidArgument("unknown graph family '" + name + "'");
}

Graph random_clique_union(const CliqueUnionParams& p, std::mt19937_64& rng) {
    if (p.cliques < 1 || p.clique_size < 1 || p.attached < 0)
        throw InvalidArgument("clique union: bad parameters");
    const int base = p.cliques * p.clique_size;
    const int n = base + p.attached;
    if (n > Graph::kMaxOrder) throw InvalidArgument("clique union: order exceeds 64");
    Graph g(n);
    std::vector<int> owner(n);
    for (int c = 0; c < p.cliques; ++c)
        for (int i = 0; i < p.clique_size; ++i) {
            const int v = c * p.clique_size + i;
            owner[v] = c;
            for (int j = i + 1; j < p.clique_size; ++j) g.add_edge(v, c * p.clique_size + j);
        }
    for (int a = 0; a < p.attached; ++a) {
        const int v = base + a;
        const int c = static_cast<int>(rng() % static_cast<std::uint64_t>(p.cliques));
        const int skip = static_cast<int>(rng() % static_cast<std::uint64_t>(p.clique_size));
        owner[v] = c;
        for (int i = 0; i < p.clique_size; ++i)
            if (i != skip) g.add_edge(v, c * p.clique_size + i);
    }
    for (int t = 0; t < p.attempts; ++t) {
        const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        if (owner[u] == owner[v] || g.adjacent(u, v)) continue;
        if (g.degree(u) >= p.max_degree || g.degree(v) >= p.max_degree) continue;
        g.add_edge(u, v);
    }
    return g;
}

std::vector<Graph> clique_joins(int min_a, int max_a, int max_order) {
    if (min_a < 0 || max_order > Graph::kMaxOrder) throw InvalidArgument("clique joins: bad parameters");
    std::vector<Graph> out;
    for (int a = min_a; a <= max_a; ++a)
        for (int m = 1; m <= std::min(5, max_order - a); ++m)
            for (const Graph& b : all_graphs(m)) out.push_back(join(complete_graph(a), b));
    return out;
}

Graph random_overlapping_cliques(const OverlapParams& p, std::mt19937_64& rng) {
    if (p.min_delta < 3 || p.max_delta < p.min_delta || p.max_order > Graph::kMaxOrder)
        throw InvalidArgument("overlapping cliques: bad parameters");
    auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    const int cap = pick(p.min_delta, p.max_delta);
    const int smin = std::max(3, (2 * cap + 2) / 3);
    std::vector<std::vector<Edge>> group_edges;
    std::vector<int> group_size;
    int n = 0;
    const int groups = pick(1, 3);
    for (int gi = 0; gi < groups; ++gi) {
        const int kind = pick(0, 2);
        const int s = pick(smin, cap);
        const int need = s + (kind == 0 ? 0 : kind == 1 ? 1 : 2);
        if (n + need > p.max_order) break;
        std::vector<Edge> es;
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j) es.push_back({i, j});
        if (kind == 1) {
            // x sees all but `miss` clique vertices
            const int miss = pick(1, std::max(1, s / 3));
            for (int i = miss; i < s; ++i) es.push_back({i, s});
        } else if (kind == 2) {
            // K_s + {x, y}, x and y see everything in K_s but each other: two K_{s+1}
            for (int i = 0; i < s; ++i) {
                es.push_back({i, s});
                es.push_back({i, s + 1});
            }
        }
        group_edges.push_back(std::move(es));
        group_size.push_back(need);
        n += need;
    }
    Graph g(n);
    std::vector<int> owner(n);
    int base = 0;
    for (std::size_t gi = 0; gi < group_edges.size(); ++gi) {
        for (auto [u, v] : group_edges[gi]) g.add_edge(base + u, base + v);
        for (int i = 0; i < group_size[gi]; ++i) owner[base + i] = static_cast<int>(gi);
        base += group_size[gi];
    }
    if (n < 2) return g;
    const int attempts = pick(0, 4 * n);
    for (int t = 0; t < attempts; ++t) {
        const int u = pick(0, n - 1), v = pick(0, n - 1);
        if (owner[u] == owner[v] || g.adjacent(u, v)) continue;
        if (g.degree(u) >= cap || g.degree(v) >= cap) continue;
        g.add_edge(u, v);
    }
    return g;
}

std::string CorpusSpec::describe() const {
    switch (source) {
        case Source::Exhaustive:
            return "exhaustive n=" + std::to_string(min_n) + ".." + std::to_string(max_n);
        case Source::Random:
            return "random G(n," + std::to_string(percent) + "%) n=" + std::to_string(min_n) + ".." +
                   std::to_string(max_n) + " count=" + std::to_string(count) +
                   " seed=" + std::to_string(seed);
        case Source::File: return "file " + path;
        case Source::Family: return "family " + family;
    }
    return "";
}

std::vector<Graph> generate_corpus(const CorpusSpec& spec) {
    std::vector<Graph> raw;
    switch (spec.source) {
        case CorpusSpec::Source::Exhaustive:
            for (int n = std::max(spec.min_n, 0); n <= spec.max_n; ++n) {
                auto level = all_graphs(n);
                raw.insert(raw.end(), level.begin(), level.end());
            }
            break;
        case CorpusSpec::Source::Random: {
            if (spec.min_n > spec.max_n || spec.min_n < 0)
                throw InvalidArgument("random corpus: bad order range");
            std::mt19937_64 rng(spec.seed);
            const auto span = static_cast<std::uint64_t>(spec.max_n - spec.min_n + 1);
            for (int i = 0; i < spec.count; ++i) {
                const int n = spec.min_n + static_cast<int>(rng() % span);
                raw.push_back(random_gnp(n, spec.percent, rng));
            }
            break;
        }
        case CorpusSpec::Source::File: {
            std::ifstream in(spec.path);
            if (!in) throw InvalidArgument("cannot open corpus file '" + spec.path + "'");
            raw = read_graph6_stream(in);
            break;
        }
        case CorpusSpec::Source::Family:
            if (spec.family.rfind("clique-union", 0) == 0) {
                CliqueUnionParams p;
                int* fields[] = {&p.cliques, &p.clique_size, &p.max_degree, &p.attached};
                std::size_t pos = spec.family.find(':');
                for (int* f : fields) {
                    if (pos == std::string::npos) break;
                    *f = std::stoi(spec.family.substr(pos + 1));
                    pos = spec.family.find(':', pos + 1);
                }
                std::mt19937_64 rng(spec.seed);
                for (int i = 0; i < spec.count; ++i) raw.push_back(random_clique_union(p, rng));
            } else if (spec.family == "overlap") {
                std::mt19937_64 rng(spec.seed);
                for (int i = 0; i < spec.count; ++i) raw.push_back(random_overlapping_cliques({}, rng));
            } else if (spec.family.rfind("clique-join", 0) == 0) {
                int v[3] = {6, 10, 14};
                std::size_t pos = spec.family.find(':');
                for (int& f : v) {
                    if (pos == std::string::npos) break;
                    f = std::stoi(spec.family.substr(pos + 1));
                    pos = spec.family.find(':', pos + 1);
                }
                raw = clique_joins(v[0], v[1], v[2]);
            } else {
                raw.push_back(named_graph(spec.family));
            }
            break;
    }
    std::vector<Graph> out;
    for (Graph& g : raw) {
        if (g.order() > 0 && (g.max_degree() < spec.min_delta || g.max_degree() > spec.max_delta))
            continue;
        if (spec.connected_only && !is_connected(g)) continue;
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace gcol
