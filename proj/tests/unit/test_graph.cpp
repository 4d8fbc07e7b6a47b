#include <doctest.h>

#include <random>

#include "gcol/error.hpp"
#include "gcol/graph.hpp"
#include "gcol/graph_io.hpp"

using namespace gcol;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, int percent) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < percent) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("graph6 decodes small graphs") {
    CHECK(parse_graph6("A_") == complete_graph(2));
    CHECK(parse_graph6("Bw") == complete_graph(3));
    CHECK(serialize_graph6(parse_graph6("D?{")) == "D?{");
    CHECK(parse_graph6(">>graph6<<Bw") == complete_graph(3));
    CHECK(parse_graph6("@").order() == 1);
    CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("B"), ParseError);       // truncated
    CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);     // trailing garbage
    CHECK_THROWS_AS(parse_graph6("B\x7f"), ParseError);   // out of range
    CHECK_THROWS_AS(parse_graph6("~?"), ParseError);      // malformed prefix
    CHECK_THROWS_AS(parse_graph6("Bx"), ParseError);      // padding bits set
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10000; ++i) {
        Graph g = random_graph(rng, static_cast<int>(rng() % 11), static_cast<int>(rng() % 101));
        REQUIRE(parse_graph6(serialize_graph6(g)) == g);
    }
}

TEST_CASE("dimacs and edge list") {
    Graph g = parse_dimacs("c test\np edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(g == path_graph(3));
    CHECK(parse_dimacs(serialize_dimacs(petersen_graph())) == petersen_graph());
    CHECK(parse_edge_list("0 1\n1 2 # comment\n") == path_graph(3));
    CHECK(parse_edge_list(serialize_edge_list(cycle_graph(5))) == cycle_graph(5));
    CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1\n1 0\n"), ParseError);
}

TEST_CASE("join") {
    Graph w = join(complete_graph(1), cycle_graph(4));
    CHECK(w.order() == 5);
    CHECK(w.degree(0) == 4);
    Graph c4 = join(empty_graph(2), empty_graph(2));
    CHECK(c4.is_regular());
    CHECK(c4.max_degree() == 2);
    CHECK(is_connected(c4));
    CHECK(join(complete_graph(4), empty_graph(3)).size() == 18);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        Graph a = random_graph(rng, 1 + static_cast<int>(rng() % 8), 50);
        Graph b = random_graph(rng, 1 + static_cast<int>(rng() % 8), 50);
        Graph j = join(a, b);
        REQUIRE(j.size() == a.size() + b.size() + a.order() * b.order());
        for (Vertex v = 0; v < a.order(); ++v) REQUIRE(j.degree(v) == a.degree(v) + b.order());
        for (Vertex v = 0; v < b.order(); ++v)
            REQUIRE(j.degree(a.order() + v) == b.degree(v) + a.order());
    }
}

TEST_CASE("blowup cycle and average degree") {
    Graph m8 = blowup_cycle(5, 3);
    CHECK(m8.order() == 15);
    CHECK(m8.size() == 60);
    CHECK(m8.is_regular());
    CHECK(m8.max_degree() == 8);
    CHECK(average_degree(m8) == Rational(8));
    CHECK(blowup_cycle(3, 1) == complete_graph(3));
    CHECK(blowup_cycle(5, 1) == cycle_graph(5));
    CHECK_THROWS_AS(blowup_cycle(2, 3), InvalidArgument);
    CHECK_THROWS_AS(blowup_cycle(5, 0), InvalidArgument);
    CHECK(average_degree(complete_graph(4)) == Rational(3));
    CHECK(average_degree(cycle_graph(5)) == Rational(2));
    CHECK_THROWS_AS(average_degree(Graph(0)), InvalidArgument);
}

TEST_CASE("neighborhood graphs") {
    CHECK(neighborhood_graph(complete_graph(5), 2).graph == complete_graph(4));
    CHECK(neighborhood_graph(cycle_graph(5), 0).graph == empty_graph(2));
    Graph m8 = blowup_cycle(5, 3);
    for (Vertex v = 0; v < 15; ++v) {
        auto nb = neighborhood_graph(m8, v);
        REQUIRE(nb.graph.order() == 8);
        REQUIRE(average_degree(nb.graph) == Rational(19, 4));  // K_2 joined to two disjoint triangles
        for (Vertex i = 0; i < 8; ++i) REQUIRE(m8.adjacent(v, nb.to_parent[i]));
    }
    CHECK_THROWS_AS(neighborhood_graph(m8, 15), InvalidArgument);
}

TEST_CASE("complement and connectivity") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        Graph g = random_graph(rng, static_cast<int>(rng() % 10), 40);
        REQUIRE(complement(complement(g)) == g);
    }
    CHECK(vertex_connectivity(complete_graph(5)) == 4);
    CHECK(vertex_connectivity(cycle_graph(6)) == 2);
    CHECK(vertex_connectivity(petersen_graph()) == 3);
    CHECK(!is_connected(disjoint_union(complete_graph(2), complete_graph(2))));
    CHECK(!minimum_separator(complete_graph(4)).has_value());
    CHECK(minimum_separator(path_graph(3))->size() == 1);
}

TEST_CASE("rational compares with plain integers") {
    const Rational eight(8), half(1, 2);
    const int i = 8;
    const std::int64_t l = 8;
    CHECK(eight == i);
    CHECK(i == eight);
    CHECK(eight == l);
    CHECK(l == eight);
    CHECK(half != 0);
    CHECK(0 != half);
    CHECK(half < 1);
    CHECK(ceil_of(half) == 1);
    CHECK(floor_of(Rational(-1, 2)) == -1);
    CHECK(to_string(Rational(6, 4)) == "3/2");
}
