#include <doctest.h>

#include <random>

#include "gcol/canonical.hpp"
#include "gcol/error.hpp"
#include "gcol/graph.hpp"
#include "gcol/oracles.hpp"

using namespace gcol;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, int percent) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < percent) g.add_edge(u, v);
    return g;
}

Graph k4_pendant() {
    Graph g = disjoint_union(complete_graph(4), complete_graph(1));
    g.add_edge(3, 4);
    return g;
}

}  // namespace

TEST_CASE("chromatic number fixtures") {
    CHECK(chromatic_number(complete_graph(5)).chi == 5);
    CHECK(chromatic_number(cycle_graph(5)).chi == 3);
    CHECK(chromatic_number(petersen_graph()).chi == 3);
    CHECK(chromatic_number(Graph(0)).chi == 0);
    CHECK(chromatic_number(empty_graph(4)).chi == 1);
    auto m8 = chromatic_number(blowup_cycle(5, 3));
    CHECK(m8.chi == 8);
    CHECK(is_proper_total(blowup_cycle(5, 3), m8.certificate));
    CHECK_THROWS_AS(chromatic_number(Graph(40)), BoundExceeded);
}

TEST_CASE("chromatic number matches naive enumeration") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 7), static_cast<int>(rng() % 101));
        auto a = chromatic_number(g);
        REQUIRE(a.chi == chromatic_number_naive(g).chi);
        REQUIRE(is_proper_total(g, a.certificate));
        REQUIRE(a.certificate.num_colors == a.chi);
    }
}

TEST_CASE("find_coloring honours precolouring") {
    auto c = find_coloring(cycle_graph(4), 2, {1, 0, 0, 0});
    REQUIRE(c);
    CHECK(c->color == std::vector<int>{1, 2, 1, 2});
    CHECK(!find_coloring(cycle_graph(4), 2, {1, 1, 0, 0}));
    CHECK(!find_coloring(cycle_graph(4), 2, {1, 0, 2, 0}));
    CHECK(!find_coloring(complete_graph(3), 2));
}

TEST_CASE("cliques and independence") {
    Graph m8 = blowup_cycle(5, 3);
    CHECK(clique_number(m8) == 6);
    CHECK(independence_number(m8) == 2);
    CHECK(independence_number(empty_graph(6)) == 6);
    CHECK(independence_number(petersen_graph()) == 4);
    auto k7 = maximal_cliques_at_least(complete_graph(7), 7);
    REQUIRE(k7.size() == 1);
    CHECK(k7[0] == VertexSet::range(7));
    CHECK(maximal_cliques_at_least(cycle_graph(5), 3).empty());
    CHECK(maximal_cliques(m8).size() == 5);
    CHECK(maximal_cliques(petersen_graph()).size() == 15);
}

TEST_CASE("maximal cliques agree with brute force") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 9), 50);
        std::vector<VertexSet> brute;
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << g.order()); ++m) {
            VertexSet s(m);
            if (!is_clique(g, s)) continue;
            bool maximal = true;
            for (Vertex v : g.vertices() - s)
                if ((g.neighbors(v) & s) == s) maximal = false;
            if (maximal) brute.push_back(s);
        }
        std::sort(brute.begin(), brute.end());
        REQUIRE(maximal_cliques(g) == brute);
        int omega = 0;
        for (auto s : brute) omega = std::max(omega, s.size());
        REQUIRE(clique_number(g) == omega);
    }
}

TEST_CASE("rho") {
    CHECK(rho(complete_graph(6)) == -1);
    CHECK(rho(cycle_graph(5)) == 0);
    CHECK(rho(petersen_graph()) == 1);
    CHECK(local_clique_number(blowup_cycle(5, 3), 0) == 6);
    CHECK_THROWS_AS(rho(Graph(0)), InvalidArgument);
}

TEST_CASE("critical subgraphs and edges") {
    CHECK(vertex_critical_subgraph(cycle_graph(5)).graph == cycle_graph(5));
    auto h = vertex_critical_subgraph(k4_pendant());
    CHECK(isomorphic(h.graph, complete_graph(4)));
    CHECK(isomorphic(vertex_critical_subgraph(path_graph(4)).graph, complete_graph(2)));
    CHECK(is_vertex_critical(cycle_graph(5)));
    CHECK(!is_vertex_critical(k4_pendant()));
    CHECK(is_critical_edge(cycle_graph(5), {0, 1}));
    CHECK(!is_critical_edge(k4_pendant(), {3, 4}));
    CHECK(is_critical_edge(complete_graph(3), {0, 2}));
    CHECK_THROWS_AS(is_critical_edge(cycle_graph(5), {0, 2}), InvalidArgument);
}

TEST_CASE("kempe components") {
    CHECK(kempe_component(path_graph(3), Coloring{{1, 2, 1}, 2}, 0, 1) == VertexSet::range(3));
    CHECK(kempe_component(path_graph(3), Coloring{{1, 2, 1}, 2}, 0, 2) == VertexSet({0}));
    Graph two = disjoint_union(complete_graph(2), complete_graph(2));
    CHECK(kempe_component(two, Coloring{{1, 2, 1, 2}, 2}, 0, 3) == VertexSet({0, 1}));
    CHECK(kempe_component(cycle_graph(6), Coloring{{1, 2, 1, 2, 3, 4}, 4}, 0, 1) ==
          VertexSet({0, 1, 2, 3}));
    CHECK_THROWS_AS(kempe_component(cycle_graph(6), Coloring{{1, 2, 1, 2, 3, 3}, 3}, 0, 1),
                    InvalidArgument);
    CHECK_THROWS_AS(kempe_component(path_graph(2), Coloring{{1, 1}, 1}, 0, 1), InvalidArgument);
}

TEST_CASE("strong chromatic check") {
    CHECK(strong_padding(5, 3) == 1);
    CHECK(strong_padding(6, 3) == 0);
    CHECK(strong_chromatic_check(complete_graph(2), 2));
    CHECK(!strong_chromatic_check(cycle_graph(4), 2));
    CHECK(strong_chromatic_check(empty_graph(4), 2));
    // {0,2,pad},{1,3,pad}: 1 and 3 both see two distinct colours
    CHECK(!strong_chromatic_check(cycle_graph(4), 3));
    CHECK(strong_chromatic_check(cycle_graph(4), 4));
}

TEST_CASE("invariant report band") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 100; ++i) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 9), 45);
        auto r = invariant_report(g);
        REQUIRE(r.omega <= r.chi);
        REQUIRE(r.chi <= r.delta_max + 1);
    }
}

TEST_CASE("canonical form") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 9), 50);
        std::vector<Vertex> perm(g.order());
        for (int j = 0; j < g.order(); ++j) perm[j] = j;
        std::shuffle(perm.begin(), perm.end(), rng);
        REQUIRE(canonical_form(relabel(g, perm)) == canonical_form(g));
    }
    CHECK(isomorphic(join(empty_graph(2), empty_graph(2)), cycle_graph(4)));
    CHECK(!isomorphic(path_graph(4), star_graph(3)));
}
