#include <doctest.h>

#include <random>

#include "gcol/corpus.hpp"
#include "gcol/error.hpp"
#include "gcol/graph_io.hpp"
#include "gcol/oracles.hpp"
#include "gcol/recolorer.hpp"

using namespace gcol;

namespace {

// straight from the definition: neighbours whose colour no other coloured neighbour shares
VertexSet oz_by_definition(const Graph& g, const Coloring& pi, Vertex z) {
    VertexSet out;
    for (Vertex v : g.neighbors(z)) {
        if (pi[v] == 0) continue;
        bool unique = true;
        for (Vertex u : g.neighbors(z))
            if (u != v && pi[u] == pi[v]) unique = false;
        if (unique) out.insert(v);
    }
    return out;
}

Coloring make_coloring(std::vector<int> c) {
    Coloring out;
    out.color = std::move(c);
    for (int x : out.color) out.num_colors = std::max(out.num_colors, x);
    return out;
}

void check_outcome(const Graph& g, const RecolorOutcome& r, int colors) {
    REQUIRE(r.coloring);
    CHECK(r.colors == colors);
    CHECK(is_proper_total(g, *r.coloring));
    for (int c : r.coloring->color) {
        CHECK(c >= 1);
        CHECK(c <= colors);
    }
    CHECK(chromatic_number(g).chi <= colors);
}

}  // namespace

TEST_CASE("O_z on small fixtures") {
    Graph star(4);
    for (int i = 1; i < 4; ++i) star.add_edge(0, i);
    auto all = make_coloring({0, 1, 2, 3});
    CHECK(compute_Oz(star, all, 0) == VertexSet{1, 2, 3});
    auto repeat = make_coloring({0, 1, 1, 2});
    CHECK(compute_Oz(star, repeat, 0) == VertexSet::single(3));
    auto blank = make_coloring({0, 1, 0, 1});
    CHECK(compute_Oz(star, blank, 0).empty());

    Graph m8 = named_graph("M8");
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Vertex z = static_cast<Vertex>(rng() % 15);
        auto minus = induced_subgraph(m8, m8.vertices() - VertexSet::single(z));
        auto c = find_coloring(minus.graph, 7);
        REQUIRE(c);
        std::vector<int> col(15, 0);
        for (int i = 0; i < minus.graph.order(); ++i) col[minus.to_parent[i]] = c->color[i];
        auto pi = make_coloring(col);
        CHECK(compute_Oz(m8, pi, z) == oz_by_definition(m8, pi, z));
    }
}

TEST_CASE("delta-1 recolouring flags unmet hypotheses and stays proper") {
    auto r = color_delta_minus_1(named_graph("C5"));
    CHECK_FALSE(r.hypotheses_hold);
    CHECK_FALSE(r.flags.empty());
    // Delta - 1 = 1 colour cannot work on C5
    CHECK_FALSE(r.coloring);

    auto k9 = named_graph("K9");
    auto q = color_delta_minus_1(k9, 9);
    CHECK_FALSE(q.hypotheses_hold);
    CHECK_FALSE(q.coloring);
}

TEST_CASE("delta-1 recolouring on clique unions") {
    std::mt19937_64 rng(11);
    int complete = 0, fallback = 0;
    for (int i = 0; i < 60; ++i) {
        CliqueUnionParams p;
        p.cliques = 2;
        p.clique_size = 8;
        p.max_degree = 9;
        p.attached = i % 3;
        p.attempts = 100 + static_cast<int>(rng() % 300);
        Graph g = random_clique_union(p, rng);
        CHECK(g.order() <= 20);
        CHECK(g.max_degree() <= 9);
        auto r = color_delta_minus_1(g, 9);
        check_outcome(g, r, 8);
        CHECK(!r.trace.empty());
        complete += r.stage == "complete";
        fallback += r.fallback;
    }
    CHECK(complete > 0);
    CHECK(fallback < 30);
}

TEST_CASE("general recolouring reaches the swap on a fixture") {
    Graph g = parse_graph6("]~~~~~~~~~~~~~~~gA??P@_KGO{@@wA@{OC~?ONw?T~__N~K?N~?@^~s?F~wS@~~?Gn~^n~OOG");
    REQUIRE(g.order() == 30);
    CHECK(g.max_degree() == 16);
    RecolorOptions o;
    o.certify_critical = false;
    auto r = color_delta_minus_k(g, 1, -1, o);
    CHECK(r.hypotheses_hold);
    CHECK(r.stage == "complete");
    CHECK_FALSE(r.fallback);
    check_outcome(g, r, 15);
}

TEST_CASE("gamma reduction steps down") {
    // Delta(C5) = 2 < gamma = 16: the pair walks down to k = 0 and Brooks
    auto c5 = named_graph("C5");
    auto r = color_delta_minus_k(c5, 1, 16);
    CHECK(r.hypotheses_hold);
    int steps = 0;
    for (auto& t : r.trace) steps += t.find("gamma-reduction") != std::string::npos;
    CHECK(steps == 1);
    CHECK(r.stage == "brooks");
    check_outcome(c5, r, 15);

    // omega(K6) = 6 > gamma - 2k: flagged before any stepping
    auto k6 = color_delta_minus_k(named_graph("K6"), 3, 7);
    CHECK_FALSE(k6.hypotheses_hold);
    CHECK(k6.fallback);
    CHECK(k6.colors == 4);
    CHECK_FALSE(k6.coloring);
}

TEST_CASE("onesies subgraph") {
    SUBCASE("C5, k = 0") {
        auto r = onesies_subgraph(named_graph("C5"), 0, 0);
        CHECK(r.h == VertexSet{1, 4});
        CHECK(r.holds1);
        CHECK(r.holds2);
        CHECK(r.holds3);
        CHECK(r.holds3_corrected);
    }
    SUBCASE("M8, k = 1") {
        Graph m8 = named_graph("M8");
        for (Vertex v : m8.vertices()) {
            auto r = onesies_subgraph(m8, v, 1);
            CHECK(is_proper(m8, r.pi));
            CHECK(r.pi[v] == 0);
            CHECK(r.h == oz_by_definition(m8, r.pi, v));
            CHECK(r.holds1);
            CHECK(r.holds2);
            CHECK(r.holds3_corrected);
        }
    }
    SUBCASE("K5, k = 0: edge count as stated fails, the double count is tight") {
        auto r = onesies_subgraph(named_graph("K5"), 0, 0);
        CHECK(r.h_order == 4);
        CHECK(r.h_size == 6);
        CHECK(r.bound3 == 8);
        CHECK_FALSE(r.holds3);
        CHECK(r.bound3_corrected == 12);
        CHECK(r.holds3_corrected);
    }
    SUBCASE("hypotheses") {
        CHECK_THROWS_AS(onesies_subgraph(named_graph("P4"), 0, 0), HypothesisError);
        CHECK_THROWS_AS(onesies_subgraph(named_graph("C5"), 0, 1), HypothesisError);
    }
}

TEST_CASE("irregular reduction") {
    // K9 plus a pendant edge: Delta = chi = 9
    Graph k9p(10);
    for (int i = 0; i < 9; ++i)
        for (int j = i + 1; j < 9; ++j) k9p.add_edge(i, j);
    k9p.add_edge(0, 9);
    auto a = irregular_reduction(k9p, 9);
    CHECK(a.kind == IrregularOutcome::Kind::Clique);
    CHECK(a.vertices == VertexSet::range(9));
    CHECK(a.flags.empty());

    // K9 itself has Delta = 8
    CHECK(irregular_reduction(named_graph("K9"), 9).kind == IrregularOutcome::Kind::HypothesisUnmet);

    Graph k5p(6);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k5p.add_edge(i, j);
    k5p.add_edge(4, 5);
    auto b = irregular_reduction(k5p, 5);
    CHECK(b.kind == IrregularOutcome::Kind::Clique);
    CHECK_FALSE(b.flags.empty());

    auto m = irregular_reduction(named_graph("M8"), 8);
    CHECK(m.kind != IrregularOutcome::Kind::Clique);
    MESSAGE("M8: " << to_string(m.kind) << " " << m.detail);
}
