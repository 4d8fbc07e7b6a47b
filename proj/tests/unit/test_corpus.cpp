#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <set>

#include "gcol/canonical.hpp"
#include "gcol/corpus.hpp"
#include "gcol/error.hpp"
#include "gcol/graph_io.hpp"
#include "gcol/oracles.hpp"

using namespace gcol;

TEST_CASE("exhaustive generation matches the class counts") {
    for (int n = 0; n <= 7; ++n) {
        const auto level = all_graphs(n);
        CHECK(level.size() == known_graph_count(n));
        std::set<std::string> seen;
        for (const Graph& g : level) {
            CHECK(g.order() == n);
            const auto c = canonical_graph6(g);
            CHECK(seen.insert(c).second);
            // representatives are stored in canonical form
            CHECK(c == serialize_graph6(g));
        }
    }
    CHECK(known_graph_count(8) == 12346);
    CHECK(all_graphs_up_to(4).size() == 1 + 1 + 2 + 4 + 11);
}

TEST_CASE("corpus specs") {
    CorpusSpec ex;
    ex.min_n = 4;
    ex.max_n = 4;
    CHECK(generate_corpus(ex).size() == 11);

    CorpusSpec rnd;
    rnd.source = CorpusSpec::Source::Random;
    rnd.count = 100;
    rnd.min_n = 1;
    rnd.max_n = 8;
    rnd.seed = 7;
    const auto a = generate_corpus(rnd);
    const auto b = generate_corpus(rnd);
    REQUIRE(a.size() == 100);
    CHECK(a == b);
    rnd.seed = 8;
    CHECK(generate_corpus(rnd) != a);

    CorpusSpec fam;
    fam.source = CorpusSpec::Source::Family;
    fam.family = "M8";
    const auto m8 = generate_corpus(fam);
    REQUIRE(m8.size() == 1);
    CHECK(m8[0] == blowup_cycle(5, 3));

    CorpusSpec filt = ex;
    filt.min_delta = 3;
    // Delta 3 on four vertices means a dominating vertex: K1 joined with one of the 4 graphs on 3
    CHECK(generate_corpus(filt).size() == 4);
    filt.min_delta = 0;
    filt.connected_only = true;
    CHECK(generate_corpus(filt).size() == 6);
}

TEST_CASE("graph6 file corpus") {
    const std::string path = "corpus_test_tmp.g6";
    {
        std::ofstream out(path);
        out << ">>graph6<<" << serialize_graph6(cycle_graph(5)) << "\n\n" << serialize_graph6(complete_graph(4)) << "\n";
    }
    CorpusSpec f;
    f.source = CorpusSpec::Source::File;
    f.path = path;
    const auto gs = generate_corpus(f);
    std::remove(path.c_str());
    REQUIRE(gs.size() == 2);
    CHECK(gs[0] == cycle_graph(5));
    CHECK(gs[1] == complete_graph(4));
    f.path = "no/such/file.g6";
    CHECK_THROWS_AS(generate_corpus(f), InvalidArgument);
}

TEST_CASE("named fixtures") {
    CHECK(named_graph("K5") == complete_graph(5));
    CHECK(named_graph("C7") == cycle_graph(7));
    CHECK(named_graph("E3").size() == 0);
    CHECK(named_graph("P4") == path_graph(4));
    CHECK(named_graph("petersen").size() == 15);
    const Graph cp = named_graph("CP3");
    CHECK(cp.order() == 6);
    CHECK(cp.size() == 12);
    CHECK(clique_number(cp) == 3);
    CHECK_THROWS_AS(named_graph("K"), InvalidArgument);
    CHECK_THROWS_AS(named_graph("Q5"), InvalidArgument);
    CHECK_THROWS_AS(named_graph("K5x"), InvalidArgument);
}

TEST_CASE("clique joins") {
    const auto js = clique_joins(6, 6, 14);
    // every B on 1..5 vertices: 1 + 2 + 4 + 11 + 34
    REQUIRE(js.size() == 52);
    for (const Graph& g : js) {
        int universal = 0;
        for (Vertex v : g.vertices())
            if (g.degree(v) == g.order() - 1) ++universal;
        CHECK(universal >= 6);
        CHECK(g.order() <= 11);
    }
    // B is capped by max_order - a
    for (const Graph& g : clique_joins(10, 10, 12)) CHECK(g.order() <= 12);
}

TEST_CASE("synthesised clique families") {
    std::mt19937_64 rng(3);
    CliqueUnionParams p;
    p.attached = 2;
    for (int i = 0; i < 20; ++i) {
        const Graph g = random_clique_union(p, rng);
        CHECK(g.order() == 18);
        CHECK(g.max_degree() <= 9);
        CHECK(clique_number(g) >= 8);
    }
    std::mt19937_64 r1(11), r2(11);
    for (int i = 0; i < 30; ++i) {
        const Graph a = random_overlapping_cliques({}, r1);
        const Graph b = random_overlapping_cliques({}, r2);
        CHECK(a == b);
        CHECK(a.order() <= 24);
        CHECK(a.max_degree() <= 14);
    }
}
