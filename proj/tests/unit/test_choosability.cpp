#include <doctest.h>

#include <random>

#include "gcol/choosability.hpp"
#include "gcol/corpus.hpp"
#include "gcol/error.hpp"

using namespace gcol;

namespace {

// Every f-assignment drawn from colours 1..pot_size, no symmetry reduction.
bool brute_choosable(const Graph& g, const DemandFunction& f, int pot_size) {
    const int n = g.order();
    std::vector<std::vector<std::vector<int>>> options(n);
    for (Vertex v = 0; v < n; ++v) {
        for (std::uint32_t m = 0; m < (1u << pot_size); ++m) {
            if (std::popcount(m) != f[v]) continue;
            std::vector<int> l;
            for (int c = 0; c < pot_size; ++c)
                if ((m >> c) & 1u) l.push_back(c + 1);
            options[v].push_back(l);
        }
        if (options[v].empty()) return false;
    }
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        ListAssignment l(n);
        for (Vertex v = 0; v < n; ++v) l[v] = options[v][idx[v]];
        if (!is_colorable_from_lists(g, l)) return false;
        int i = 0;
        while (i < n && ++idx[i] == options[i].size()) idx[i++] = 0;
        if (i == n) return true;
    }
}

}  // namespace

TEST_CASE("list colouring fixtures") {
    CHECK(!is_colorable_from_lists(complete_graph(3), {{1, 2}, {1, 2}, {1, 2}}));
    auto c = is_colorable_from_lists(complete_graph(3), {{1, 2}, {1, 2}, {3}});
    REQUIRE(c);
    CHECK(c->color[2] == 3);
    auto c4 = is_colorable_from_lists(cycle_graph(4), {{1, 2}, {1, 2}, {1, 2}, {1, 2}});
    REQUIRE(c4);
    CHECK(is_proper(cycle_graph(4), *c4));
    CHECK(pot({{3, 1}, {2, 3}}) == std::vector<int>{1, 2, 3});
}

TEST_CASE("choosability fixtures") {
    CHECK(is_dk_choosable(cycle_graph(4), 0).choosable);
    auto k4e3 = is_dk_choosable(join(complete_graph(4), empty_graph(3)), 1);
    CHECK(!k4e3.choosable);
    REQUIRE(k4e3.witness);
    CHECK(!is_colorable_from_lists(join(complete_graph(4), empty_graph(3)), *k4e3.witness));
    CHECK(is_dk_choosable(join(complete_graph(6), empty_graph(3)), 1).choosable);
    CHECK(!is_dk_choosable(cycle_graph(5), 0).choosable);
    CHECK(!is_dk_choosable(join(complete_graph(5), empty_graph(3)), 1).choosable);
    CHECK(!is_dk_choosable(join(complete_graph(1), join(empty_graph(3), complete_graph(4))), 1).choosable);
    CHECK(is_dk_choosable(join(complete_graph(2), empty_graph(2)), 0).choosable);
    CHECK_THROWS_AS(is_dk_choosable(complete_graph(11), 1), BoundExceeded);
    CHECK_THROWS_AS(is_f_choosable(complete_graph(3), {1, 1}), InvalidArgument);
}

TEST_CASE("empty lists are bad") {
    auto v = is_f_choosable(path_graph(3), {1, 0, 1});
    CHECK(!v.choosable);
    REQUIRE(v.witness);
    CHECK((*v.witness)[1].empty());
}

TEST_CASE("witness pot is minimum") {
    // K_3 with 2-lists: bad already with pot 2
    auto v = is_f_choosable(complete_graph(3), {2, 2, 2});
    REQUIRE(!v.choosable);
    CHECK(pot(*v.witness).size() == 2);
    // K_{2,4} is not 2-choosable; smallest bad pot is 4
    Graph k24 = join(empty_graph(2), empty_graph(4));
    auto w = is_f_choosable(k24, DemandFunction(6, 2));
    REQUIRE(!w.choosable);
    CHECK(pot(*w.witness).size() == 4);
    CHECK(is_f_choosable(join(empty_graph(2), empty_graph(3)), DemandFunction(5, 2)).choosable);
}

TEST_CASE("dynamic programme agrees with brute force") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 150; ++i) {
        const int n = 2 + static_cast<int>(rng() % 4);
        Graph g = random_gnp(n, 60, rng);
        DemandFunction f(n);
        for (auto& x : f) x = 1 + static_cast<int>(rng() % 3);
        for (auto& x : f) x = std::min(x, n - 1);
        ChoosabilityOptions plain;
        plain.reduce_easy_vertices = false;
        const bool brute = brute_choosable(g, f, n - 1);
        REQUIRE(is_f_choosable(g, f, plain).choosable == brute);
        REQUIRE(is_f_choosable(g, f).choosable == brute);
        if (n > 4) continue;
        ChoosabilityOptions open;
        open.small_pot_cap = false;
        REQUIRE(is_f_choosable(g, f, open).choosable == brute_choosable(g, f, n + 2));
    }
}

TEST_CASE("induced choosable subgraph scan") {
    CHECK(!has_induced_dk_choosable_subgraph(complete_graph(7), 1));
    auto c6 = has_induced_dk_choosable_subgraph(cycle_graph(6), 0);
    REQUIRE(c6);
    CHECK(*c6 == VertexSet::range(6));
    CHECK(!has_induced_dk_choosable_subgraph(cycle_graph(5), 0));
}

TEST_CASE("pot closure") {
    CHECK(check_pot_colorability_closure(complete_graph(3), {{1, 2}, {1, 2}, {1, 2}}, {1}));
    auto v = is_dk_choosable(join(complete_graph(4), empty_graph(3)), 1);
    REQUIRE(v.witness);
    const auto p = pot(*v.witness);
    for (std::uint32_t m = 1; m < (1u << p.size()); ++m) {
        std::vector<int> s;
        for (std::size_t i = 0; i < p.size(); ++i)
            if ((m >> i) & 1u) s.push_back(p[i]);
        REQUIRE(check_pot_colorability_closure(join(complete_graph(4), empty_graph(3)), *v.witness, s));
    }
}
