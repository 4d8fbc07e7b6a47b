#include <doctest.h>

#include <atomic>
#include <set>

#include "gcol/corpus.hpp"
#include "gcol/error.hpp"
#include "gcol/harness.hpp"

using namespace gcol;

namespace {

CorpusSpec exhaustive(int max_n) {
    CorpusSpec c;
    c.min_n = 1;
    c.max_n = max_n;
    return c;
}

CorpusSpec family(const std::string& name) {
    CorpusSpec c;
    c.source = CorpusSpec::Source::Family;
    c.family = name;
    return c;
}

const Margin& margin(const TheoremCheck& c, const std::string& name) {
    for (const auto& m : c.margins)
        if (m.name == name) return m;
    FAIL("no margin " << name);
    return c.margins.front();
}

}  // namespace

TEST_CASE("order bound term, exact") {
    // ceil((15 + sqrt(793)) / 4) with sqrt(793) = 28.16...
    CHECK(order_bound_term(15) == 11);
    // 48 + 73 = 121 = 11^2: (15 + 11) / 4 = 6.5
    CHECK(order_bound_term(1) == 7);
    // n = 57: 48n + 73 = 2809 = 53^2, (15 + 53) / 4 = 17 exactly
    CHECK(order_bound_term(57) == 17);
    CHECK(order_bound_term(58) == 18);
}

TEST_CASE("bounded partitions") {
    CHECK(bounded_partitions(4, 2, 2, 100).size() == 3);   // perfect matchings of K4
    CHECK(bounded_partitions(3, 2, 2, 100).size() == 3);
    CHECK(bounded_partitions(4, 4, 1, 100).size() == 1);
    CHECK(bounded_partitions(5, 3, 2, 100).size() == 10);  // sizes 2 + 3
    CHECK(bounded_partitions(5, 5, 5, 100).size() == 52);  // Bell(5)
    // stops one past the limit so callers can tell
    CHECK(bounded_partitions(5, 5, 5, 7).size() == 8);
    for (const auto& p : bounded_partitions(6, 3, 2, 1000)) {
        REQUIRE(p.size() == 2);
        CHECK(p[0].contains(0));
        CHECK((p[0] | p[1]) == VertexSet::range(6));
        CHECK((p[0] & p[1]).empty());
    }
}

TEST_CASE("worker pool keeps index order") {
    for (int jobs : {1, 2, 5}) {
        const auto out = run_pool(40, jobs, [](int i) {
            std::vector<TheoremCheck> v(i % 3);
            for (auto& c : v) c.graph_id = std::to_string(i);
            return v;
        });
        std::vector<int> ids;
        for (const auto& c : out) ids.push_back(std::stoi(c.graph_id));
        CHECK(std::is_sorted(ids.begin(), ids.end()));
        CHECK(out.size() == 39);  // 13 indices each of 1 and 2 results
    }
    CHECK_THROWS_AS(run_pool(10, 3,
                             [](int i) -> std::vector<TheoremCheck> {
                                 if (i == 7) throw InvalidArgument("seven");
                                 return {};
                             }),
                    InvalidArgument);
}

TEST_CASE("report folding") {
    std::vector<TheoremCheck> cs(4);
    cs[0].hypotheses_hold = true;
    cs[1].hypotheses_hold = false;
    cs[2].hypotheses_hold = true;
    cs[2].conclusion_holds = false;
    cs[2].graph6 = "Dhc";
    cs[3].skipped = true;
    cs[3].hypotheses_hold = true;
    cs[3].conclusion_holds = false;
    const auto r = make_report("x", "y", cs, false);
    CHECK(r.counts.checked == 3);
    CHECK(r.counts.vacuous == 1);
    CHECK(r.counts.holds == 1);
    CHECK(r.counts.skipped == 1);
    REQUIRE(r.alerts.size() == 1);
    CHECK(r.alerts[0].graph6 == "Dhc");
    CHECK(!r.ok());
    CHECK(r.checks.empty());
    CHECK(make_report("x", "y", cs, true).checks.size() == 4);
}

TEST_CASE("alpha bound is tight on M8") {
    VerifyOptions o;
    o.keep_checks = true;
    const auto r = verify_alpha_bound(family("M8"), o);
    REQUIRE(r.checks.size() == 1);
    const auto& c = r.checks[0];
    CHECK(c.conclusion_holds);
    CHECK((margin(c, "chi").value == 8));
    CHECK((margin(c, "4alpha").value == 8));
    CHECK((margin(c, "slack").value == 0));
    const auto ob = verify_order_bound(family("M8"), o);
    CHECK((margin(ob.checks[0], "order_term").value == 11));
    CHECK((margin(ob.checks[0], "bound").value == 11));
}

TEST_CASE("complete graphs meet both bounds at omega") {
    VerifyOptions o;
    o.keep_checks = true;
    for (int n = 2; n <= 9; ++n) {
        const auto r = verify_alpha_bound(family("K" + std::to_string(n)), o);
        CHECK(r.ok());
        CHECK((margin(r.checks[0], "chi").value == n));
        CHECK((margin(r.checks[0], "omega").value == n));
    }
}

TEST_CASE("small exhaustive sweeps hold") {
    VerifyOptions o;
    const auto a = verify_alpha_bound(exhaustive(6), o);
    CHECK(a.counts.checked == 1 + 2 + 4 + 11 + 34 + 156);
    CHECK(a.ok());
    CHECK(verify_order_bound(exhaustive(6), o).ok());
    const auto d = verify_dense_neighborhood_theorems(exhaustive(5), o);
    CHECK(d.ok());
    CHECK(d.counts.holds < d.counts.checked);
    // M8: Delta = 8 < 9 so the two-thirds clique statement is vacuous
    o.keep_checks = true;
    for (const auto& c : verify_dense_neighborhood_theorems(family("M8"), o).checks)
        if (c.theorem_id == "two-thirds-clique") CHECK(!c.hypotheses_hold);
}

TEST_CASE("reports are deterministic across worker counts") {
    VerifyOptions o1, o3;
    o3.jobs = 3;
    o1.max_n = o3.max_n = 5;
    for (const std::string id : {"alpha-bound", "strong-color-bound", "onesies"}) {
        const auto a = report_to_json(verify_theorem(id, std::nullopt, o1), false);
        const auto b = report_to_json(verify_theorem(id, std::nullopt, o3), false);
        CHECK(a == b);
    }
    o1.transversal_instances = o3.transversal_instances = 300;
    CHECK(report_to_json(verify_transversal_agreement(o1)) == report_to_json(verify_transversal_agreement(o3)));
    CHECK_THROWS_AS(verify_theorem("nope", std::nullopt, o1), InvalidArgument);
}

TEST_CASE("theorem ids and default corpora") {
    const auto ids = theorem_ids();
    CHECK(ids.size() == 10);
    CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
    VerifyOptions o;
    o.max_n = 7;
    const auto c = default_corpus("alpha-bound", o);
    REQUIRE(c);
    CHECK(c->max_n == 7);
    CHECK(!default_corpus("transversal", o));
}
