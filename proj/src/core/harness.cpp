#include "gcol/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include <json.hpp>

#include "gcol/canonical.hpp"
#include "gcol/choosability.hpp"
#include "gcol/decomposition.hpp"
#include "gcol/error.hpp"
#include "gcol/graph_io.hpp"
#include "gcol/recolorer.hpp"
#include "gcol/strong_coloring.hpp"
#include "gcol/transversal.hpp"

namespace gcol {

int order_bound_term(int n) {
    const std::int64_t target = 48 * static_cast<std::int64_t>(n) + 73;
    int m = 4;  // 4m - 15 >= 0 from here on
    while ((4 * m - 15) * static_cast<std::int64_t>(4 * m - 15) < target) ++m;
    return m;
}

std::vector<std::vector<VertexSet>> bounded_partitions(int n, int block_size, int max_blocks, std::size_t limit) {
    if (n < 0 || n > Graph::kMaxOrder || block_size < 1 || max_blocks < 0)
        throw InvalidArgument("bounded_partitions: bad parameters");
    std::vector<std::vector<VertexSet>> out;
    std::vector<VertexSet> cur;
    std::function<void(int)> rec = [&](int v) {
        if (out.size() > limit) return;
        if (v == n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t b = 0; b < cur.size(); ++b)
            if (cur[b].size() < block_size) {
                cur[b].insert(v);
                rec(v + 1);
                cur[b].erase(v);
            }
        if (static_cast<int>(cur.size()) < max_blocks) {
            cur.push_back(VertexSet::single(v));
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<TheoremCheck> run_pool(int count, int jobs, const std::function<std::vector<TheoremCheck>(int)>& fn) {
    std::vector<std::vector<TheoremCheck>> parts(std::max(count, 0));
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            const int i = next.fetch_add(1);
            if (i >= count) return;
            try {
                parts[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = count;
                return;
            }
        }
    };
    const int threads = std::max(1, std::min(jobs, count));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    std::vector<TheoremCheck> out;
    for (auto& p : parts)
        for (auto& c : p) out.push_back(std::move(c));
    return out;
}

VerifyReport make_report(const std::string& theorem, const std::string& corpus, std::vector<TheoremCheck> checks,
                         bool keep_checks) {
    VerifyReport r;
    r.theorem = theorem;
    r.corpus = corpus;
    std::map<std::string, std::pair<int, int>> per_id;  // checked, hypotheses hold
    for (const auto& c : checks) {
        if (!c.skipped) {
            ++per_id[c.theorem_id].first;
            if (c.hypotheses_hold) ++per_id[c.theorem_id].second;
        }
        if (c.skipped) {
            ++r.counts.skipped;
            continue;
        }
        ++r.counts.checked;
        if (!c.hypotheses_hold)
            ++r.counts.vacuous;
        else if (c.conclusion_holds)
            ++r.counts.holds;
        if (c.red()) r.alerts.push_back(c);
    }
    // vacuity per statement, so a suite mixing several cannot hide one
    if (per_id.size() > 1)
        for (const auto& [id, n] : per_id)
            r.notes.push_back(id + ": checked " + std::to_string(n.first) + ", hypotheses hold " +
                              std::to_string(n.second));
    if (keep_checks) r.checks = std::move(checks);
    return r;
}

namespace {

std::uint64_t instance_seed(std::uint64_t seed, int i) {
    // splitmix so neighbouring indices get unrelated streams
    std::uint64_t z = seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(i) + 1;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

TheoremCheck base_check(const std::string& id, const std::string& graph_id, const Graph& g) {
    TheoremCheck c;
    c.theorem_id = id;
    c.graph_id = graph_id;
    c.graph6 = serialize_graph6(g);
    return c;
}

// Runs body; an exhausted bound marks the check skipped, a falsification
// makes it red.
void guarded(TheoremCheck& c, const std::function<void()>& body) {
    try {
        body();
    } catch (const BoundExceeded& e) {
        c.skipped = true;
        c.detail = e.what();
    } catch (const FalsificationError& e) {
        c.hypotheses_hold = true;
        c.conclusion_holds = false;
        c.detail = e.what();
    }
}

VerifyReport merge(VerifyReport a, const VerifyReport& b) {
    a.corpus += " + " + b.corpus;
    a.counts.checked += b.counts.checked;
    a.counts.vacuous += b.counts.vacuous;
    a.counts.holds += b.counts.holds;
    a.counts.skipped += b.counts.skipped;
    a.alerts.insert(a.alerts.end(), b.alerts.begin(), b.alerts.end());
    a.notes.insert(a.notes.end(), b.notes.begin(), b.notes.end());
    a.checks.insert(a.checks.end(), b.checks.begin(), b.checks.end());
    return a;
}

std::vector<TheoremCheck> per_graph(const std::vector<Graph>& graphs, const VerifyOptions& o,
                                    const std::function<std::vector<TheoremCheck>(const Graph&, int)>& fn) {
    return run_pool(static_cast<int>(graphs.size()), o.jobs, [&](int i) { return fn(graphs[i], i); });
}

std::vector<TheoremCheck> single_bound(const Graph& g, int i, const std::string& id, const OracleLimits& limits,
                                       bool alpha) {
    TheoremCheck c = base_check(id, std::to_string(i), g);
    if (g.order() == 0) {
        c.hypotheses_hold = true;
        return {c};
    }
    guarded(c, [&] {
        const int chi = chromatic_number(g, limits).chi;
        const int omega = clique_number(g);
        const int delta = g.max_degree();
        const int third = alpha ? 4 * independence_number(g) : order_bound_term(g.order());
        const int bound = std::max({omega, delta - 1, third});
        c.hypotheses_hold = true;
        c.conclusion_holds = chi <= bound;
        c.margins = {{"chi", chi}, {"omega", omega}, {"Delta", delta}, {alpha ? "4alpha" : "order_term", third},
                     {"bound", bound}, {"slack", bound - chi}};
    });
    return {c};
}

}  // namespace

VerifyReport verify_alpha_bound(const CorpusSpec& corpus, const VerifyOptions& o) {
    const auto graphs = generate_corpus(corpus);
    auto checks = per_graph(graphs, o, [&](const Graph& g, int i) {
        return single_bound(g, i, "alpha-bound", o.limits, true);
    });
    return make_report("alpha-bound", corpus.describe(), std::move(checks), o.keep_checks);
}

VerifyReport verify_order_bound(const CorpusSpec& corpus, const VerifyOptions& o) {
    const auto graphs = generate_corpus(corpus);
    auto checks = per_graph(graphs, o, [&](const Graph& g, int i) {
        return single_bound(g, i, "order-bound", o.limits, false);
    });
    return make_report("order-bound", corpus.describe(), std::move(checks), o.keep_checks);
}

VerifyReport verify_dense_neighborhood_theorems(const CorpusSpec& corpus, const VerifyOptions& o) {
    const auto graphs = generate_corpus(corpus);
    auto checks = per_graph(graphs, o, [&](const Graph& g, int i) {
        std::vector<TheoremCheck> out;
        if (g.order() == 0) return out;
        const std::string gid = std::to_string(i);
        const int delta = g.max_degree();
        const int omega = clique_number(g);
        const auto lc = local_clique_numbers(g);
        const int min_lc = *std::min_element(lc.begin(), lc.end());
        Rational min_dv;
        bool first = true;
        for (Vertex v = 0; v < g.order(); ++v) {
            const Graph gv = neighborhood_graph(g, v).graph;
            const Rational d = gv.order() ? average_degree(gv) : Rational(0);
            if (first || d < min_dv) min_dv = d;
            first = false;
        }
        std::optional<int> chi_cache;
        auto chi = [&] {
            if (!chi_cache) chi_cache = chromatic_number(g, o.limits).chi;
            return *chi_cache;
        };
        auto add = [&](const std::string& id, const std::function<void(TheoremCheck&)>& body) {
            TheoremCheck c = base_check(id, gid, g);
            guarded(c, [&] { body(c); });
            out.push_back(std::move(c));
        };

        add("two-thirds-clique", [&](TheoremCheck& c) {
            const Rational need = Rational(2, 3) * delta + 2;
            c.margins = {{"Delta", delta}, {"min_local_clique", min_lc}, {"clique_needed", need}};
            c.hypotheses_hold = delta >= 9 && Rational(min_lc) >= need && chi() >= delta;
            c.conclusion_holds = omega >= delta;
        });
        add("bk-dense", [&](TheoremCheck& c) {
            const Rational need = Rational(2, 3) * delta + 4;
            c.margins = {{"Delta", delta}, {"omega", omega}, {"min_neighbourhood_degree", min_dv},
                         {"needed", need}};
            c.hypotheses_hold = omega < delta && min_dv >= need;
            if (c.hypotheses_hold) c.conclusion_holds = chi() <= delta - 1;
        });
        for (int k = 1; 2 * k <= std::max(delta, 2); ++k)
            add("simple-corollary[k=" + std::to_string(k) + "]", [&](TheoremCheck& c) {
                const Rational need = Rational(2 * k, 2 * k + 1) * delta + 2 * k + 1;
                c.margins = {{"k", k}, {"min_local_clique", min_lc}, {"clique_needed", need}};
                c.hypotheses_hold = omega <= delta - 2 * k && Rational(min_lc) >= need;
                if (c.hypotheses_hold) c.conclusion_holds = chi() <= delta - k;
            });
        for (int k = 0; 2 * k <= delta; ++k)
            add("main-result[k=" + std::to_string(k) + "]", [&](TheoremCheck& c) {
                const Rational need = Rational(6 * k * k, 6 * k * k + 1) * delta + k + 6;
                c.margins = {{"k", k}, {"min_neighbourhood_degree", min_dv}, {"needed", need}};
                c.hypotheses_hold = omega <= delta - 2 * k && min_dv >= need;
                if (c.hypotheses_hold) c.conclusion_holds = chi() <= delta - k;
            });
        return out;
    });
    return make_report("dense-neighborhood", corpus.describe(), std::move(checks), o.keep_checks);
}

VerifyReport verify_strong_color_bound(const CorpusSpec& corpus, const VerifyOptions& o) {
    const auto graphs = generate_corpus(corpus);
    std::atomic<long> partitions{0};
    std::atomic<int> capped{0};
    auto checks = per_graph(graphs, o, [&](const Graph& g, int i) -> std::vector<TheoremCheck> {
        const int delta = g.order() ? g.max_degree() : 0;
        if (delta == 0) return {};
        TheoremCheck c = base_check("strong-color-bound", std::to_string(i), g);
        c.hypotheses_hold = true;
        const int n = g.order();
        const int r = 3 * delta;
        const int blocks = (n + r - 1) / r;
        const auto cap = static_cast<std::size_t>(o.partition_cap);
        auto parts = bounded_partitions(n, r, blocks, cap);
        bool sampled = false;
        if (parts.size() > cap) {
            // uniform over padded layouts: shuffle real and padding slots, cut into parts of r
            sampled = true;
            ++capped;
            parts.clear();
            std::mt19937_64 rng(instance_seed(o.seed, i));
            std::vector<int> slots(blocks * r, -1);
            for (int v = 0; v < n; ++v) slots[v] = v;
            for (std::size_t s = 0; s < cap; ++s) {
                std::shuffle(slots.begin(), slots.end(), rng);
                std::vector<VertexSet> p;
                for (int b = 0; b < blocks; ++b) {
                    VertexSet part;
                    for (int j = 0; j < r; ++j)
                        if (slots[b * r + j] >= 0) part.insert(slots[b * r + j]);
                    if (!part.empty()) p.push_back(part);
                }
                parts.push_back(std::move(p));
            }
        }
        partitions += static_cast<long>(parts.size());
        int max_repairs = 0;
        guarded(c, [&] {
            for (const auto& p : parts) {
                VertexPartition vp(n, p);
                auto res = strong_color(g, vp, r);
                max_repairs = std::max(max_repairs, res.repairs);
                if (!verify_strong_coloring(g, vp, r, res.coloring)) {
                    c.conclusion_holds = false;
                    c.detail = "verification failed on partition " + serialize_partition(vp);
                    return;
                }
            }
        });
        c.margins = {{"r", r}, {"partitions", static_cast<int>(parts.size())}, {"sampled", sampled ? 1 : 0},
                     {"max_repairs", max_repairs}};
        return {c};
    });
    auto rep = make_report("strong-color-bound", corpus.describe(), std::move(checks), o.keep_checks);
    rep.notes.push_back("partitions checked: " + std::to_string(partitions.load()));
    rep.notes.push_back("graphs over the partition cap of " + std::to_string(o.partition_cap) +
                        " (sampled): " + std::to_string(capped.load()));
    return rep;
}

VerifyReport verify_transversal_agreement(const VerifyOptions& o) {
    std::atomic<int> no_instances{0};
    auto checks = run_pool(o.transversal_instances, o.jobs, [&](int i) {
        std::mt19937_64 rng(instance_seed(o.seed, i));
        const int n = 2 + static_cast<int>(rng() % 9);
        const int b = 1 + static_cast<int>(rng() % std::min(4, n));
        Graph g = random_gnp(n, 10 + static_cast<int>(rng() % 60), rng);
        std::vector<Vertex> order(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<VertexSet> blocks(b);
        for (int j = 0; j < n; ++j) blocks[j < b ? j : rng() % b].insert(order[j]);
        VertexPartition p(n, blocks);
        TheoremCheck c = base_check("transversal", std::to_string(i), g);
        c.hypotheses_hold = true;
        guarded(c, [&] {
            const auto out = find_independent_transversal(g, p);
            const bool naive = naive_transversal_exists(g, p);
            if (out.transversal.has_value() != naive) {
                c.conclusion_holds = false;
                c.detail = "search and enumeration disagree";
            } else if (out.transversal && !verify_transversal(g, p, *out.transversal)) {
                c.conclusion_holds = false;
                c.detail = "returned transversal fails verification";
            } else if (!out.transversal) {
                ++no_instances;
                if (!out.certificate || !verify_certificate(g, p, *out.certificate)) {
                    c.conclusion_holds = false;
                    c.detail = "no-instance without a valid certificate";
                }
            }
            if (!c.conclusion_holds) c.detail += "; partition " + serialize_partition(p);
        });
        return std::vector<TheoremCheck>{c};
    });
    auto rep = make_report("transversal", "random partitioned G(n,p), n=2..10, <=4 blocks, seed=" +
                                               std::to_string(o.seed), std::move(checks), o.keep_checks);
    rep.notes.push_back("no-instances with verified certificates: " + std::to_string(no_instances.load()));
    return rep;
}

VerifyReport verify_decompositions(const VerifyOptions& o) {
    auto checks = run_pool(o.decomposition_instances, o.jobs, [&](int i) {
        std::mt19937_64 rng(instance_seed(o.seed, i));
        Graph g = random_overlapping_cliques({}, rng);
        const std::string gid = std::to_string(i);
        const int delta = g.max_degree();
        const int omega = clique_number(g);
        const Rational two_thirds = Rational(2, 3) * (delta + 1);
        std::vector<TheoremCheck> out;

        auto run = [&](const std::string& id, const Rational& t,
                       const std::function<std::optional<std::string>()>& body) {
            TheoremCheck c = base_check(id, gid, g);
            c.margins = {{"t", t}, {"Delta", delta}, {"omega", omega}};
            guarded(c, [&] {
                try {
                    auto bad = body();
                    c.hypotheses_hold = true;
                    c.conclusion_holds = !bad;
                    if (bad) c.detail = *bad;
                } catch (const HypothesisError& e) {
                    c.detail = e.what();
                }
            });
            out.push_back(std::move(c));
            if (t >= two_thirds) {
                TheoremCheck x = base_check("x-t-cluster", gid, g);
                x.margins = {{"t", t}, {"two_thirds_Delta_plus_1", two_thirds}};
                x.hypotheses_hold = true;
                x.conclusion_holds = intersection_graph_is_cluster(big_cliques(g, t));
                out.push_back(std::move(x));
            }
        };
        const int t1 = static_cast<int>(ceil_of(Rational(2 * delta, 3))) + 1;
        run("decompose-k1", t1, [&] {
            DecompositionOptions d;
            d.assume_no_dk_choosable = true;
            auto dec = decompose_k1(g, t1, d);
            return check_decomposition_k1(g, dec);
        });
        const Rational tg = threshold_U_prime(1, omega, delta);
        run("decompose-general", tg, [&] {
            DecompositionOptions d;
            d.assume_no_dk_choosable = true;
            auto dec = decompose_general(g, 1, tg, d);
            return check_decomposition_general(g, dec);
        });
        return out;
    });
    return make_report("decomposition", "overlapping cliques, seed=" + std::to_string(o.seed), std::move(checks),
                       o.keep_checks);
}

VerifyReport verify_onesies(const CorpusSpec& corpus, const VerifyOptions& o) {
    const auto graphs = generate_corpus(corpus);
    std::atomic<int> critical{0}, corrected_fail{0};
    auto checks = per_graph(graphs, o, [&](const Graph& g, int i) {
        std::vector<TheoremCheck> out;
        if (g.order() == 0) return out;
        TheoremCheck head = base_check("onesies", std::to_string(i), g);
        bool is_crit = false;
        guarded(head, [&] { is_crit = is_vertex_critical(g, o.limits); });
        if (head.skipped || !is_crit) {
            out.push_back(std::move(head));
            return out;
        }
        ++critical;
        const int chi = chromatic_number(g, o.limits).chi;
        const int k = g.max_degree() + 1 - chi;
        for (Vertex v = 0; v < g.order(); ++v) {
            TheoremCheck c = base_check("onesies", std::to_string(i) + ":v" + std::to_string(v), g);
            guarded(c, [&] {
                auto r = onesies_subgraph(g, v, k, o.limits);
                c.hypotheses_hold = true;
                c.conclusion_holds = r.holds1 && r.holds2 && r.holds3;
                c.margins = {{"k", k},
                             {"H", r.h_order},
                             {"bound1", r.bound1},
                             {"min_degree_H", r.h_min_degree},
                             {"bound2", r.bound2},
                             {"edges_H", r.h_size},
                             {"bound3", r.bound3},
                             {"bound3_double_count", r.bound3_corrected}};
                std::string failed;
                if (!r.holds1) failed += " (1)";
                if (!r.holds2) failed += " (2)";
                if (!r.holds3) failed += " (3)";
                if (!failed.empty())
                    c.detail = "failed:" + failed + "; 2||H|| >= |H|(|H|-(k+2)) - (k+1)(n+2k-(2Delta+1)) " +
                               (r.holds3_corrected ? "holds" : "fails");
                if (!r.holds3_corrected) ++corrected_fail;
            });
            out.push_back(std::move(c));
        }
        return out;
    });
    auto rep = make_report("onesies", corpus.describe(), std::move(checks), o.keep_checks);
    rep.notes.push_back("vertex-critical graphs: " + std::to_string(critical.load()));
    rep.notes.push_back("vertices failing the double-counted edge bound: " + std::to_string(corrected_fail.load()));
    return rep;
}

namespace {

bool cobipartite(const Graph& b) {
    const Graph c = complement(b);
    std::vector<int> side(c.order(), -1);
    for (Vertex s = 0; s < c.order(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : c.neighbors(u)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[u];
                    stack.push_back(w);
                } else if (side[w] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

VerifyReport verify_choosability_lemmas(const VerifyOptions& o) {
    const std::string e3 = canonical_graph6(empty_graph(3));
    const std::string claw = canonical_graph6(star_graph(3));
    const std::string e3k4 = canonical_graph6(join(empty_graph(3), complete_graph(4)));
    ChoosabilityOptions copt;
    copt.max_order = 10;

    std::vector<std::function<std::vector<TheoremCheck>()>> jobs;
    // K_4 and K_5 joined with every B, |B| <= 5
    for (int m = 1; m <= 5; ++m)
        for (const Graph& b : all_graphs(m))
            jobs.push_back([&, b, m] {
                std::vector<TheoremCheck> out;
                const std::string cb = canonical_graph6(b);
                const int w = clique_number(b);
                for (int t : {4, 5}) {
                    TheoremCheck c = base_check("kt-classification[t=" + std::to_string(t) + "]",
                                                "B=" + serialize_graph6(b), b);
                    bool choosable = true;
                    guarded(c, [&] {
                        choosable = is_dk_choosable(join(complete_graph(t), b), 1, copt).choosable;
                        const bool predicted_bad = w >= m - 1 || (t == 4 && (cb == e3 || cb == claw)) ||
                                                   (t == 5 && cb == e3);
                        c.hypotheses_hold = true;
                        c.conclusion_holds = choosable != predicted_bad;
                        c.margins = {{"choosable", choosable ? 1 : 0}, {"omega", w}, {"order", m}};
                    });
                    out.push_back(c);
                    if (t != 4 || c.skipped) continue;
                    TheoremCheck g = base_check("general-clique-join[k=1]", c.graph_id, b);
                    g.hypotheses_hold = !choosable;
                    g.conclusion_holds = w >= m - 2;
                    g.margins = {{"omega", w}, {"order", m}};
                    out.push_back(g);
                    if (cobipartite(b)) {
                        TheoremCheck tc = base_check("two-cliques[k=1]", c.graph_id, b);
                        tc.hypotheses_hold = !choosable;
                        tc.conclusion_holds = w >= m - 1;
                        tc.margins = g.margins;
                        out.push_back(tc);
                    }
                }
                return out;
            });
    // E_2 joined with A, 4 <= |A| <= 5, one full-degree vertex per component of A
    for (int m = 4; m <= 5; ++m)
        for (const Graph& a : all_graphs(m))
            jobs.push_back([&, a, m] {
                const Graph g = join(empty_graph(2), a);
                TheoremCheck c = base_check("e2-join-some-low", "A=" + serialize_graph6(a), a);
                c.hypotheses_hold = true;
                const auto comps = components(a);
                int profiles = 0;
                guarded(c, [&] {
                    std::vector<int> pick(comps.size(), 0);
                    while (true) {
                        DemandFunction f(g.order());
                        for (Vertex v = 0; v < g.order(); ++v) f[v] = g.degree(v) - 1;
                        for (std::size_t j = 0; j < comps.size(); ++j) {
                            const Vertex x = comps[j].to_vector()[pick[j]] + 2;
                            f[x] = g.degree(x);
                        }
                        ++profiles;
                        if (!is_f_choosable(g, f, copt).choosable) {
                            c.conclusion_holds = false;
                            c.detail = "bad assignment for a demand profile";
                            return;
                        }
                        std::size_t j = 0;
                        while (j < comps.size() && pick[j] + 1 == comps[j].size()) pick[j++] = 0;
                        if (j == comps.size()) break;
                        ++pick[j];
                    }
                });
                c.margins = {{"profiles", profiles}};
                return std::vector<TheoremCheck>{c};
            });
    jobs.push_back([&] {
        TheoremCheck a = base_check("big-independent-join[k=0]", "K2+E2", join(complete_graph(2), empty_graph(2)));
        a.hypotheses_hold = true;
        a.conclusion_holds = is_dk_choosable(join(complete_graph(2), empty_graph(2)), 0, copt).choosable;
        TheoremCheck b = base_check("big-independent-join[k=1]", "K6+E3", join(complete_graph(6), empty_graph(3)));
        b.hypotheses_hold = true;
        b.conclusion_holds = is_dk_choosable(join(complete_graph(6), empty_graph(3)), 1, copt).choosable;
        return std::vector<TheoremCheck>{a, b};
    });
    // K_1 joined with B: high minimum degree, |B| <= 6; neighbourhood lemma, |B| <= max
    for (int m = 1; m <= std::max(6, o.neighborhood_max_order); ++m)
        for (const Graph& b : all_graphs(m)) {
            const bool high = m <= 6 && 4 * b.min_degree() >= 3 * m;
            const bool nbhd = m <= o.neighborhood_max_order && 2 * b.min_degree() >= m + 1;
            if (!high && !nbhd) continue;
            jobs.push_back([&, b, m, high, nbhd] {
                std::vector<TheoremCheck> out;
                TheoremCheck probe = base_check("", "B=" + serialize_graph6(b), b);
                bool choosable = true;
                guarded(probe, [&] { choosable = is_dk_choosable(join(complete_graph(1), b), 1, copt).choosable; });
                const int w = clique_number(b);
                if (high) {
                    TheoremCheck c = probe;
                    c.theorem_id = "high-min-degree-clique[k=1]";
                    if (!c.skipped) {
                        c.hypotheses_hold = !choosable;
                        c.conclusion_holds = w >= m - 2;
                    }
                    c.margins = {{"omega", w}, {"order", m}, {"min_degree", b.min_degree()}};
                    out.push_back(c);
                }
                if (nbhd) {
                    TheoremCheck c = probe;
                    c.theorem_id = "neighborhood[k=1]";
                    if (!c.skipped) {
                        c.hypotheses_hold = !choosable;
                        c.conclusion_holds = w >= m - 1 || canonical_graph6(b) == e3k4;
                    }
                    c.margins = {{"omega", w}, {"order", m}, {"min_degree", b.min_degree()}};
                    out.push_back(c);
                }
                return out;
            });
        }
    auto checks = run_pool(static_cast<int>(jobs.size()), o.jobs, [&](int i) { return jobs[i](); });
    auto rep = make_report("choosability-lemmas", "lemma instance table, |B| <= " +
                                                      std::to_string(o.neighborhood_max_order),
                           std::move(checks), o.keep_checks);
    return rep;
}

VerifyReport verify_small_pot(const VerifyOptions& o) {
    struct Item {
        Graph g;
        std::vector<DemandFunction> demands;
    };
    std::vector<Item> items;
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : all_graphs(n)) {
            Item it{g, {}};
            DemandFunction f(n, 1);
            while (true) {
                it.demands.push_back(f);
                int i = 0;
                while (i < n && f[i] == n - 1) f[i++] = 1;
                if (i == n) break;
                ++f[i];
            }
            items.push_back(std::move(it));
        }
    std::mt19937_64 rng(instance_seed(o.seed, 7));
    auto sampled = [&](const Graph& g) {
        const int n = g.order();
        Item it{g, {}};
        DemandFunction near(n), wide(n);
        for (Vertex v = 0; v < n; ++v) {
            near[v] = std::clamp(g.degree(v) - static_cast<int>(rng() % 2), 1, n - 1);
            wide[v] = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::clamp(g.degree(v), 1, n - 1)));
        }
        it.demands = {near, wide};
        return it;
    };
    for (const Graph& g : all_graphs(6)) items.push_back(sampled(g));
    const auto seven = all_graphs(7);
    for (int s = 0; s < 150; ++s) items.push_back(sampled(seven[rng() % seven.size()]));

    auto checks = run_pool(static_cast<int>(items.size()), o.jobs, [&](int i) {
        const Item& it = items[i];
        const int n = it.g.order();
        std::vector<TheoremCheck> out;
        for (std::size_t j = 0; j < it.demands.size(); ++j) {
            const auto& f = it.demands[j];
            TheoremCheck c = base_check("small-pot", std::to_string(i) + ":" + std::to_string(j), it.g);
            c.hypotheses_hold = true;
            guarded(c, [&] {
                ChoosabilityOptions capped;
                auto x = is_f_choosable(it.g, f, capped);
                if (!x.choosable) {
                    const int p = static_cast<int>(pot(*x.witness).size());
                    c.conclusion_holds = p < n;
                    c.margins = {{"witness_pot", p}};
                    return;
                }
                ChoosabilityOptions open;
                open.small_pot_cap = false;
                open.max_states = o.small_pot_budget;
                c.conclusion_holds = is_f_choosable(it.g, f, open).choosable;
                if (!c.conclusion_holds) c.detail = "bad assignment exists only with a large pot";
            });
            if (!c.conclusion_holds || c.skipped) {
                std::string fs;
                for (int x : f) fs += std::to_string(x) + " ";
                c.detail += "; f = " + fs;
            }
            out.push_back(std::move(c));
        }
        return out;
    });
    auto rep = make_report("small-pot", "all f for n=2..5; two sampled f per graph for n=6 and 150 graphs n=7",
                           std::move(checks), o.keep_checks);
    rep.notes.push_back("uncapped search budget: " + std::to_string(o.small_pot_budget) + " states");
    return rep;
}

VerifyReport verify_recolorer(const VerifyOptions& o) {
    std::mutex stage_mutex;
    std::map<std::string, int> stages;
    std::atomic<int> complete{0}, fallback{0}, hyp{0};
    auto checks = run_pool(o.recolorer_instances, o.jobs, [&](int i) {
        std::mt19937_64 rng(instance_seed(o.seed, i));
        CliqueUnionParams p;
        p.attached = i % 3;
        p.attempts = 100 + static_cast<int>(rng() % 300);
        Graph g = random_clique_union(p, rng);
        TheoremCheck c = base_check("recolorer", std::to_string(i), g);
        c.hypotheses_hold = true;
        guarded(c, [&] {
            RecolorOptions ro;
            ro.limits = o.limits;
            auto r = color_delta_minus_1(g, 9, ro);
            const int chi = chromatic_number(g, o.limits).chi;
            bool ok = r.coloring.has_value() == (chi <= r.colors);
            if (r.coloring) {
                ok = ok && is_proper_total(g, *r.coloring);
                for (int col : r.coloring->color) ok = ok && col >= 1 && col <= r.colors;
            }
            c.conclusion_holds = ok;
            c.margins = {{"n", g.order()},          {"Delta", g.max_degree()},
                         {"chi", chi},              {"colors", r.colors},
                         {"hypotheses", r.hypotheses_hold ? 1 : 0}, {"fallback", r.fallback ? 1 : 0}};
            c.detail = "stage " + r.stage;
            for (const auto& f : r.flags) c.detail += "; " + f;
            std::lock_guard<std::mutex> lock(stage_mutex);
            ++stages[r.stage + (r.fallback ? " (oracle)" : "")];
            complete += r.stage == "complete";
            fallback += r.fallback;
            hyp += r.hypotheses_hold;
        });
        return std::vector<TheoremCheck>{c};
    });
    auto rep = make_report("recolorer", "clique-union:2:8:9:{0,1,2}, seed=" + std::to_string(o.seed),
                           std::move(checks), o.keep_checks);
    const int total = o.recolorer_instances;
    rep.notes.push_back("hypotheses hold: " + std::to_string(hyp.load()) + "/" + std::to_string(total));
    rep.notes.push_back("constructive path to the swap: " + std::to_string(complete.load()) + "/" +
                        std::to_string(total));
    rep.notes.push_back("oracle fallback: " + std::to_string(fallback.load()) + "/" + std::to_string(total));
    for (const auto& [s, n] : stages) rep.notes.push_back("stage " + s + ": " + std::to_string(n));
    return rep;
}

std::vector<std::string> theorem_ids() {
    return {"alpha-bound", "order-bound",  "dense-neighborhood",  "strong-color-bound", "transversal",
            "decomposition", "onesies",    "choosability-lemmas", "small-pot",          "recolorer"};
}

std::optional<CorpusSpec> default_corpus(const std::string& id, const VerifyOptions& o) {
    if (id == "alpha-bound" || id == "order-bound" || id == "dense-neighborhood" || id == "strong-color-bound" ||
        id == "onesies") {
        CorpusSpec c;
        c.source = CorpusSpec::Source::Exhaustive;
        c.min_n = 1;
        c.max_n = o.max_n;
        return c;
    }
    return std::nullopt;
}

VerifyReport verify_theorem(const std::string& id, const std::optional<CorpusSpec>& corpus, const VerifyOptions& o) {
    const auto ids = theorem_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw InvalidArgument("unknown theorem id '" + id + "'");
    const auto spec = corpus ? corpus : default_corpus(id, o);
    auto family = [](const std::string& name) {
        CorpusSpec c;
        c.source = CorpusSpec::Source::Family;
        c.family = name;
        return c;
    };
    if (id == "alpha-bound") {
        auto r = verify_alpha_bound(*spec, o);
        return corpus ? r : merge(r, verify_alpha_bound(family("M8"), o));
    }
    if (id == "order-bound") {
        auto r = verify_order_bound(*spec, o);
        return corpus ? r : merge(r, verify_order_bound(family("M8"), o));
    }
    if (id == "dense-neighborhood") {
        auto r = verify_dense_neighborhood_theorems(*spec, o);
        if (corpus) return r;
        r = merge(r, verify_dense_neighborhood_theorems(family("M8"), o));
        return merge(r, verify_dense_neighborhood_theorems(family("clique-join:6:10:14"), o));
    }
    if (id == "strong-color-bound") return verify_strong_color_bound(*spec, o);
    if (id == "onesies") return verify_onesies(*spec, o);
    if (id == "transversal") return verify_transversal_agreement(o);
    if (id == "decomposition") return verify_decompositions(o);
    if (id == "choosability-lemmas") return verify_choosability_lemmas(o);
    if (id == "small-pot") return verify_small_pot(o);
    return verify_recolorer(o);
}

namespace {

nlohmann::ordered_json check_json(const TheoremCheck& c) {
    nlohmann::ordered_json j;
    j["theorem"] = c.theorem_id;
    j["graph"] = c.graph_id;
    j["graph6"] = c.graph6;
    j["hypotheses_hold"] = c.hypotheses_hold;
    j["conclusion_holds"] = c.conclusion_holds;
    if (c.skipped) j["skipped"] = true;
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    for (const auto& x : c.margins) m[x.name] = to_string(x.value);
    j["margins"] = m;
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

}  // namespace

std::string report_to_json(const VerifyReport& r, bool include_checks) {
    nlohmann::ordered_json j;
    j["theorem"] = r.theorem;
    j["corpus"] = r.corpus;
    j["counts"] = {{"checked", r.counts.checked},
                   {"vacuous", r.counts.vacuous},
                   {"holds", r.counts.holds},
                   {"skipped", r.counts.skipped}};
    j["alerts"] = nlohmann::ordered_json::array();
    for (const auto& a : r.alerts) j["alerts"].push_back(check_json(a));
    j["notes"] = r.notes;
    if (include_checks) {
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : r.checks) j["checks"].push_back(check_json(c));
    }
    return j.dump(2);
}

}  // namespace gcol
