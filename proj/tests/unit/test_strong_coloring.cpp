#include <doctest.h>

#include <random>

#include "gcol/corpus.hpp"
#include "gcol/error.hpp"
#include "gcol/strong_coloring.hpp"

using namespace gcol;

TEST_CASE("strong colouring fixtures") {
    VertexPartition p3(5, {VertexSet{0, 1, 2}, VertexSet{3, 4}});
    auto e = strong_color(empty_graph(5), p3, 3);
    CHECK(e.repairs == 0);
    CHECK(verify_strong_coloring(empty_graph(5), p3, 3, e.coloring));

    Graph matching = Graph::from_edges(6, {{0, 3}, {1, 4}, {2, 5}});
    VertexPartition pm(6, {VertexSet{0, 1, 2}, VertexSet{3, 4, 5}});
    auto m = strong_color(matching, pm, 3, true);
    CHECK(verify_strong_coloring(matching, pm, 3, m.coloring));
    CHECK(m.repairs >= 1);
    CHECK(m.repairs <= 3);
    CHECK(m.trace.size() == static_cast<std::size_t>(m.repairs));
    CHECK(strong_chromatic_check(matching, 3));

    VertexPartition pc(6, {VertexSet::range(6)});
    auto c6 = strong_color(cycle_graph(6), pc, 6);
    CHECK(verify_strong_coloring(cycle_graph(6), pc, 6, c6.coloring));
    CHECK(strong_chromatic_check(cycle_graph(6), 6));

    CHECK_THROWS_AS(strong_color(cycle_graph(6), pc, 5), HypothesisError);
    CHECK_THROWS_AS(strong_color(empty_graph(5), p3, 2), InvalidArgument);
}

TEST_CASE("strong colouring verifier") {
    VertexPartition p(4, {VertexSet{0, 1}, VertexSet{2, 3}});
    Graph g = Graph::from_edges(4, {{0, 2}});
    CHECK(verify_strong_coloring(g, p, 2, Coloring{{1, 2, 2, 1}, 2}));
    CHECK(!verify_strong_coloring(g, p, 2, Coloring{{1, 1, 2, 1}, 2}));  // repeat inside block
    CHECK(!verify_strong_coloring(g, p, 2, Coloring{{1, 2, 1, 2}, 2}));  // improper
}

TEST_CASE("strong colouring on random partitions of small graphs") {
    std::mt19937_64 rng(19);
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : all_graphs(n)) {
            const int delta = g.max_degree();
            if (delta == 0) continue;
            const int r = 3 * delta;
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<Vertex> vs(n);
                for (int i = 0; i < n; ++i) vs[i] = i;
                std::shuffle(vs.begin(), vs.end(), rng);
                std::vector<VertexSet> blocks;
                for (int i = 0; i < n; ++i) {
                    if (i % r == 0) blocks.emplace_back();
                    blocks.back().insert(vs[i]);
                }
                VertexPartition p(n, blocks);
                auto res = strong_color(g, p, r);
                REQUIRE(verify_strong_coloring(g, p, r, res.coloring));
                REQUIRE(res.repairs <= g.size());
            }
        }
}
