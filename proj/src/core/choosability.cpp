#include "gcol/choosability.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "gcol/error.hpp"

namespace gcol {

std::vector<int> pot(const ListAssignment& lists) {
    std::vector<int> out;
    for (const auto& l : lists) out.insert(out.end(), l.begin(), l.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

struct ListSearch {
    const Graph& g;
    std::vector<std::uint64_t> allowed;  // bit i = colour index i
    std::vector<int> color;              // colour index, -1 uncoloured
    int colored = 0;

    bool run() {
        const int n = g.order();
        if (colored == n) return true;
        Vertex best = -1;
        int best_count = 65;
        for (Vertex v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            std::uint64_t a = available(v);
            const int c = std::popcount(a);
            if (c < best_count) {
                best_count = c;
                best = v;
                if (c == 0) return false;
            }
        }
        std::uint64_t a = available(best);
        while (a) {
            color[best] = std::countr_zero(a);
            a &= a - 1;
            ++colored;
            if (run()) return true;
            --colored;
        }
        color[best] = -1;
        return false;
    }

    std::uint64_t available(Vertex v) const {
        std::uint64_t a = allowed[v];
        for (Vertex u : g.neighbors(v))
            if (color[u] >= 0) a &= ~(std::uint64_t{1} << color[u]);
        return a;
    }
};

}  // namespace

std::optional<Coloring> is_colorable_from_lists(const Graph& g, const ListAssignment& lists) {
    if (static_cast<int>(lists.size()) != g.order())
        throw InvalidArgument("list assignment size does not match graph order");
    const auto colors = pot(lists);
    if (colors.size() > 64) throw BoundExceeded("list colouring: more than 64 distinct colours");
    ListSearch s{g, std::vector<std::uint64_t>(g.order(), 0), std::vector<int>(g.order(), -1)};
    for (Vertex v = 0; v < g.order(); ++v)
        for (int c : lists[v]) {
            auto it = std::lower_bound(colors.begin(), colors.end(), c);
            s.allowed[v] |= std::uint64_t{1} << (it - colors.begin());
        }
    if (!s.run()) return std::nullopt;
    Coloring out{std::vector<int>(g.order(), 0), colors.empty() ? 0 : colors.back()};
    for (Vertex v = 0; v < g.order(); ++v) out.color[v] = colors[s.color[v]];
    return out;
}

namespace {

// Adversary-versus-colourer dynamic programme over a vertex order. After
// placing lists on a prefix, the colourer's position is summarised by the set
// of achievable "signatures": for every group of later vertices sharing the
// same already-placed neighbours, the set of colours used on those
// neighbours. Only colours occurring in some signature are distinguishable;
// all others are interchangeable fresh colours.
class ChoiceSearch {
public:
    ChoiceSearch(const Graph& g, std::vector<Vertex> order, const DemandFunction& f, int pot_cap,
                 std::uint64_t budget = 0)
        : g_(g), order_(std::move(order)), f_(f), cap_(pot_cap), budget_(budget), memo_(order_.size() + 1) {
        build_levels();
    }

    bool run() {
        State s{1, {}};
        std::vector<int> real;
        lists_.assign(g_.order(), {});
        return good(0, s, real);
    }

    ListAssignment witness() const {
        ListAssignment out(g_.order());
        for (Vertex v = 0; v < g_.order(); ++v) {
            for (int c : lists_[v]) out[v].push_back(c + 1);
            std::sort(out[v].begin(), out[v].end());
        }
        return out;
    }

    std::uint64_t states() const { return states_; }

private:
    struct State {
        int rows = 0;
        std::vector<std::uint64_t> d;
    };

    struct Step {
        int width = 0;       // classes before placing the vertex
        int vclass = -1;     // class of the vertex being placed
        int next_width = 0;  // classes after
        std::vector<int> src;
        std::vector<char> adj;
    };

    struct KeyHash {
        std::size_t operator()(const std::vector<std::uint64_t>& v) const {
            std::uint64_t h = 0x9e3779b97f4a7c15ull ^ v.size();
            for (auto x : v) {
                h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
                h *= 0xff51afd7ed558ccdull;
            }
            return static_cast<std::size_t>(h ^ (h >> 29));
        }
    };

    void build_levels() {
        const int n = static_cast<int>(order_.size());
        std::vector<std::vector<VertexSet>> keys(n + 1);
        VertexSet prefix;
        for (int i = 0; i <= n; ++i) {
            for (int j = i; j < n; ++j) {
                VertexSet k = g_.neighbors(order_[j]) & prefix;
                if (!k.empty() && std::find(keys[i].begin(), keys[i].end(), k) == keys[i].end())
                    keys[i].push_back(k);
            }
            if (i < n) prefix.insert(order_[i]);
        }
        auto index_of = [&](int level, VertexSet k) {
            if (k.empty()) return -1;
            auto it = std::find(keys[level].begin(), keys[level].end(), k);
            return static_cast<int>(it - keys[level].begin());
        };
        prefix = VertexSet{};
        steps_.resize(n);
        for (int i = 0; i < n; ++i) {
            const Vertex v = order_[i];
            Step& st = steps_[i];
            st.width = static_cast<int>(keys[i].size());
            st.vclass = index_of(i, g_.neighbors(v) & prefix);
            st.next_width = static_cast<int>(keys[i + 1].size());
            for (VertexSet k : keys[i + 1]) {
                st.src.push_back(index_of(i, k - VertexSet::single(v)));
                st.adj.push_back(k.contains(v));
            }
            prefix.insert(v);
        }
    }

    // Drops dominated signatures, relabels colours to 0..a-1 and sorts rows.
    // Returns the permutation applied (old label -> new label, -1 if dropped).
    std::vector<int> normalize(State& s, int width, int labels) {
        if (width == 0) {
            s.rows = std::min(s.rows, 1);
            return std::vector<int>(labels, -1);
        }
        // antichain: keep rows not containing a kept row
        std::vector<int> idx(s.rows);
        std::iota(idx.begin(), idx.end(), 0);
        std::vector<int> weight(s.rows, 0);
        for (int r = 0; r < s.rows; ++r)
            for (int j = 0; j < width; ++j) weight[r] += std::popcount(s.d[r * width + j]);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return weight[a] < weight[b]; });
        std::vector<std::uint64_t> kept;
        kept.reserve(s.d.size());
        int kept_rows = 0;
        for (int r : idx) {
            const std::uint64_t* row = &s.d[r * width];
            bool dominated = false;
            for (int q = 0; q < kept_rows && !dominated; ++q) {
                const std::uint64_t* k = &kept[q * width];
                bool sub = true;
                for (int j = 0; j < width; ++j)
                    if (k[j] & ~row[j]) {
                        sub = false;
                        break;
                    }
                dominated = sub;
            }
            if (dominated) continue;
            kept.insert(kept.end(), row, row + width);
            ++kept_rows;
        }
        // colour features: occurrence counts per class
        std::vector<std::vector<int>> feat(labels, std::vector<int>(width, 0));
        std::uint64_t active = 0;
        for (int q = 0; q < kept_rows; ++q)
            for (int j = 0; j < width; ++j) {
                std::uint64_t w = kept[q * width + j];
                active |= w;
                while (w) {
                    ++feat[std::countr_zero(w)][j];
                    w &= w - 1;
                }
            }
        std::vector<int> colors;
        for (int c = 0; c < labels; ++c)
            if ((active >> c) & 1u) colors.push_back(c);
        std::stable_sort(colors.begin(), colors.end(),
                         [&](int a, int b) { return feat[a] > feat[b]; });
        std::vector<int> perm(labels, -1);
        for (std::size_t i = 0; i < colors.size(); ++i) perm[colors[i]] = static_cast<int>(i);
        for (auto& w : kept) {
            std::uint64_t out = 0;
            while (w) {
                out |= std::uint64_t{1} << perm[std::countr_zero(w)];
                w &= w - 1;
            }
            w = out;
        }
        // sort rows lexicographically
        std::vector<int> order(kept_rows);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return std::lexicographical_compare(kept.begin() + a * width, kept.begin() + (a + 1) * width,
                                                kept.begin() + b * width, kept.begin() + (b + 1) * width);
        });
        s.d.clear();
        for (int r : order) s.d.insert(s.d.end(), kept.begin() + r * width, kept.begin() + (r + 1) * width);
        s.rows = kept_rows;
        return perm;
    }

    bool good(int level, const State& s, const std::vector<int>& real) {
        if (++states_ > budget_ && budget_ != 0)
            throw BoundExceeded("choosability: search state budget " + std::to_string(budget_) + " exhausted");
        const int n = static_cast<int>(order_.size());
        if (level == n) return s.rows > 0;
        const Step& st = steps_[level];
        const Vertex v = order_[level];
        const int fv = f_[v];
        const int a = static_cast<int>(real.size());
        const int w = st.width;

        if (level == n - 1) {
            std::uint64_t inter = ~std::uint64_t{0};
            for (int r = 0; r < s.rows; ++r) inter &= st.vclass >= 0 ? s.d[r * w + st.vclass] : 0;
            if (std::popcount(inter) < fv) return true;
            for (int i = 0; i < fv; ++i) {
                lists_[v].push_back(real[std::countr_zero(inter)]);
                inter &= inter - 1;
            }
            return false;
        }

        const int min_s = cap_ < 0 ? 0 : std::max(0, fv - (cap_ - a));
        const int max_s = std::min(fv, a);
        State next;
        for (int size = max_s; size >= min_s; --size) {
            const int m = fv - size;
            if (a + m > 64) throw BoundExceeded("choosability: more than 64 live colours");
            // Gosper's hack over size-subsets of the a active labels
            std::uint64_t sub = size == 0 ? 0 : (std::uint64_t{1} << size) - 1;
            const std::uint64_t limit = std::uint64_t{1} << a;
            while (sub < limit) {
                const std::uint64_t fresh =
                    m == 0 ? 0 : (((std::uint64_t{1} << m) - 1) << a);
                const std::uint64_t choice = sub | fresh;
                next.rows = 0;
                next.d.clear();
                for (int r = 0; r < s.rows; ++r) {
                    const std::uint64_t* row = &s.d[r * w];
                    std::uint64_t opts = choice & ~(st.vclass >= 0 ? row[st.vclass] : 0);
                    while (opts) {
                        const int c = std::countr_zero(opts);
                        opts &= opts - 1;
                        for (int j = 0; j < st.next_width; ++j) {
                            std::uint64_t x = st.src[j] >= 0 ? row[st.src[j]] : 0;
                            if (st.adj[j]) x |= std::uint64_t{1} << c;
                            next.d.push_back(x);
                        }
                        ++next.rows;
                    }
                }
                auto fresh_reals = [&]() {
                    std::vector<int> out;
                    std::vector<int> used(real.begin(), real.end());
                    std::sort(used.begin(), used.end());
                    int cand = 0;
                    std::size_t ui = 0;
                    while (static_cast<int>(out.size()) < m) {
                        while (ui < used.size() && used[ui] < cand) ++ui;
                        if (ui < used.size() && used[ui] == cand) {
                            ++cand;
                            continue;
                        }
                        out.push_back(cand++);
                    }
                    return out;
                };
                auto record_list = [&]() {
                    for (std::uint64_t t = sub; t; t &= t - 1) lists_[v].push_back(real[std::countr_zero(t)]);
                    for (int c : fresh_reals()) lists_[v].push_back(c);
                };
                if (next.rows == 0) {
                    record_list();
                    return false;
                }
                const auto perm = normalize(next, st.next_width, a + m);
                std::vector<std::uint64_t> key = next.d;
                key.push_back(static_cast<std::uint64_t>(next.rows));
                auto& memo = memo_[level + 1];
                if (!memo.count(key)) {
                    const auto fr = fresh_reals();
                    int live = 0;
                    for (int p : perm) live += p >= 0;
                    std::vector<int> next_real(live);
                    for (int c = 0; c < a + m; ++c)
                        if (perm[c] >= 0) next_real[perm[c]] = c < a ? real[c] : fr[c - a];
                    if (!good(level + 1, next, next_real)) {
                        record_list();
                        return false;
                    }
                    if (memo.size() < kMemoLimit) memo.insert(std::move(key));
                }
                if (size == 0) break;
                const std::uint64_t lo = sub & (~sub + 1);
                const std::uint64_t ripple = sub + lo;
                sub = (((ripple ^ sub) >> 2) / lo) | ripple;
            }
        }
        return true;
    }

    static constexpr std::size_t kMemoLimit = 4'000'000;

    const Graph& g_;
    std::vector<Vertex> order_;
    const DemandFunction& f_;
    int cap_;
    std::uint64_t budget_;
    std::vector<Step> steps_;
    std::vector<std::unordered_set<std::vector<std::uint64_t>, KeyHash>> memo_;
    std::vector<std::vector<int>> lists_;
    std::uint64_t states_ = 0;
};

std::vector<Vertex> search_order(const Graph& g, VertexSet vs) {
    std::vector<Vertex> order = vs.to_vector();
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return (g.neighbors(a) & vs).size() > (g.neighbors(b) & vs).size();
    });
    return order;
}

ListAssignment trivial_lists(const DemandFunction& f) {
    ListAssignment out(f.size());
    for (std::size_t v = 0; v < f.size(); ++v)
        for (int c = 1; c <= f[v]; ++c) out[v].push_back(c);
    return out;
}

}  // namespace

ChoosabilityVerdict is_f_choosable(const Graph& g, const DemandFunction& f,
                                   const ChoosabilityOptions& options) {
    const int n = g.order();
    if (static_cast<int>(f.size()) != n) throw InvalidArgument("demand vector size does not match graph order");
    if (std::any_of(f.begin(), f.end(), [](int x) { return x < 0; }))
        throw InvalidArgument("negative demand");
    if (n > options.max_order)
        throw BoundExceeded("choosability: order " + std::to_string(n) + " exceeds bound " +
                            std::to_string(options.max_order));
    ChoosabilityVerdict verdict;
    for (Vertex v = 0; v < n; ++v)
        if (f[v] == 0) {
            // an empty list is bad on its own
            verdict.choosable = false;
            verdict.witness = trivial_lists(f);
            return verdict;
        }

    VertexSet live = g.vertices();
    if (options.reduce_easy_vertices) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (Vertex v : live)
                if (f[v] > (g.neighbors(v) & live).size()) {
                    live.erase(v);
                    changed = true;
                }
        }
    }
    if (live.empty()) return verdict;
    const InducedSubgraph sub = induced_subgraph(g, live);
    const int m = sub.graph.order();
    DemandFunction fs(m);
    int max_f = 0;
    int sum_f = 0;
    for (int i = 0; i < m; ++i) {
        fs[i] = f[sub.to_parent[i]];
        max_f = std::max(max_f, fs[i]);
        sum_f += fs[i];
    }
    const auto order = search_order(sub.graph, sub.graph.vertices());

    auto finish = [&](const ChoiceSearch& s) {
        verdict.choosable = false;
        ListAssignment w = trivial_lists(f);
        const ListAssignment local = s.witness();
        for (int i = 0; i < m; ++i) w[sub.to_parent[i]] = local[i];
        if (is_colorable_from_lists(g, w))
            throw FalsificationError("choosability: reported witness is colourable");
        verdict.witness = std::move(w);
    };

    if (!options.small_pot_cap) {
        ChoiceSearch s(sub.graph, order, fs, -1, options.max_states);
        const bool ok = s.run();
        verdict.states += s.states();
        verdict.pot_searched = -1;
        if (!ok) finish(s);
        return verdict;
    }
    // Small Pot bound when every demand is below the order, else the trivial one.
    const int bound = max_f < m ? std::max(m - 1, max_f) : sum_f;
    if (bound > 64) throw BoundExceeded("choosability: pot bound above 64 colours");
    for (int p = max_f; p <= bound; ++p) {
        if (options.max_states != 0 && verdict.states >= options.max_states)
            throw BoundExceeded("choosability: search state budget exhausted");
        ChoiceSearch s(sub.graph, order, fs, p, options.max_states == 0 ? 0 : options.max_states - verdict.states);
        const bool ok = s.run();
        verdict.states += s.states();
        verdict.pot_searched = p;
        if (!ok) {
            finish(s);
            return verdict;
        }
    }
    return verdict;
}

DemandFunction dk_demand(const Graph& g, int k) {
    DemandFunction f(g.order());
    for (Vertex v = 0; v < g.order(); ++v) f[v] = std::max(0, g.degree(v) - k);
    return f;
}

ChoosabilityVerdict is_dk_choosable(const Graph& g, int k, const ChoosabilityOptions& options) {
    return is_f_choosable(g, dk_demand(g, k), options);
}

std::optional<VertexSet> has_induced_dk_choosable_subgraph(const Graph& g, int k,
                                                           const ChoosabilityOptions& options) {
    const int n = g.order();
    if (n > options.max_order)
        throw BoundExceeded("induced subgraph scan: order " + std::to_string(n) + " exceeds bound");
    for (int size = 1; size <= n; ++size) {
        std::vector<int> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            VertexSet s;
            for (int i : idx) s.insert(i);
            const Graph h = induced_subgraph(g, s).graph;
            if (is_dk_choosable(h, k, options).choosable) return s;
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

bool check_pot_colorability_closure(const Graph& g, const ListAssignment& lists,
                                    const std::vector<int>& s) {
    if (static_cast<int>(lists.size()) != g.order())
        throw InvalidArgument("list assignment size does not match graph order");
    VertexSet vs;
    for (Vertex v = 0; v < g.order(); ++v)
        for (int c : lists[v])
            if (std::find(s.begin(), s.end(), c) != s.end()) vs.insert(v);
    const InducedSubgraph gs = induced_subgraph(g, vs);
    ListAssignment restricted(gs.graph.order());
    for (int i = 0; i < gs.graph.order(); ++i)
        for (int c : lists[gs.to_parent[i]])
            if (std::find(s.begin(), s.end(), c) != s.end()) restricted[i].push_back(c);
    return !is_colorable_from_lists(gs.graph, restricted).has_value();
}

}  // namespace gcol
