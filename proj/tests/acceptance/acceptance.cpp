// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Exit status is nonzero when any criterion fails.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "gcol/corpus.hpp"
#include "gcol/graph.hpp"
#include "gcol/harness.hpp"
#include "gcol/oracles.hpp"

using namespace gcol;

namespace {

// Wall-clock budgets in seconds, one per timed criterion.
constexpr double kBudgetExhaustiveChi = 10;
constexpr double kBudgetRandomChi = 60;
constexpr double kBudgetM8 = 10;
constexpr double kBudgetBounds = 30 * 60;
constexpr double kBudgetOnesies = 10 * 60;

constexpr int kRandomChiGraphs = 1000;
constexpr int kMinTransversal = 10000;
constexpr int kMinDecomposition = 1000;
constexpr int kMinRecolorer = 50;

int failures = 0;

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void verdict(int id, const std::string& name, bool pass, const std::string& summary) {
    if (!pass) ++failures;
    std::printf("%s %d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), summary.c_str());
    std::fflush(stdout);
}

void detail(const std::string& line) { std::printf("    %s\n", line.c_str()); }

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", s);
    return buf;
}

std::string counts(const VerifyReport& r) {
    return "checked " + std::to_string(r.counts.checked) + ", hypotheses hold " +
           std::to_string(r.counts.checked - r.counts.vacuous) + ", conclusion holds " +
           std::to_string(r.counts.holds) + ", skipped " + std::to_string(r.counts.skipped) + ", alerts " +
           std::to_string(r.alerts.size());
}

void dump(const VerifyReport& r, std::size_t max_alerts = 5) {
    for (const auto& n : r.notes) detail(r.theorem + ": " + n);
    for (std::size_t i = 0; i < r.alerts.size() && i < max_alerts; ++i) {
        const auto& a = r.alerts[i];
        std::string m;
        for (const auto& x : a.margins) m += " " + x.name + "=" + to_string(x.value);
        detail("alert " + a.theorem_id + " graph " + a.graph6 + m + (a.detail.empty() ? "" : " (" + a.detail + ")"));
    }
    if (r.alerts.size() > max_alerts) detail("... " + std::to_string(r.alerts.size() - max_alerts) + " more alerts");
}

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

void chi_cross_validation() {
    Clock t1;
    int graphs = 0, mismatches = 0, n7 = 0;
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : all_graphs(n)) {
            ++graphs;
            if (n == 7) ++n7;
            const auto fast = chromatic_number(g);
            if (fast.chi != chromatic_number_naive(g).chi || !is_proper_total(g, fast.certificate)) ++mismatches;
        }
    }
    const double s1 = t1.seconds();

    Clock t2;
    std::mt19937_64 rng(20240601);
    int random_mismatches = 0;
    for (int i = 0; i < kRandomChiGraphs; ++i) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const int percent = 10 + static_cast<int>(rng() % 81);
        const Graph g = random_gnp(n, percent, rng);
        const auto fast = chromatic_number(g);
        if (fast.chi != chromatic_number_naive(g).chi || !is_proper_total(g, fast.certificate)) ++random_mismatches;
    }
    const double s2 = t2.seconds();

    const bool pass = mismatches == 0 && random_mismatches == 0 && n7 == 1044 && s1 < kBudgetExhaustiveChi &&
                      s2 < kBudgetRandomChi;
    verdict(1, "chromatic number: branch and bound vs enumeration", pass,
            std::to_string(graphs) + " exhaustive graphs n<=7 (" + std::to_string(n7) + " at n=7), " +
                std::to_string(mismatches) + " mismatches, " + fmt_seconds(s1) + "; " +
                std::to_string(kRandomChiGraphs) + " random n<=8, " + std::to_string(random_mismatches) +
                " mismatches, " + fmt_seconds(s2));
}

void m8_fixture() {
    Clock t;
    const Graph g = blowup_cycle(5, 3);
    const int n = g.order(), m = g.size(), dmax = g.max_degree(), dmin = g.min_degree();
    const int omega = clique_number(g), alpha = independence_number(g);
    const auto chi = chromatic_number(g);
    const double s = t.seconds();
    const bool pass = n == 15 && m == 60 && dmax == 8 && dmin == 8 && omega == 6 && alpha == 2 && chi.chi == 8 &&
                      chi.chi == 4 * alpha && is_proper_total(g, chi.certificate) && s < kBudgetM8;
    verdict(2, "M8 fixture", pass,
            "n=" + std::to_string(n) + " m=" + std::to_string(m) + " Delta=" + std::to_string(dmax) +
                " delta=" + std::to_string(dmin) + " omega=" + std::to_string(omega) + " alpha=" +
                std::to_string(alpha) + " chi=" + std::to_string(chi.chi) + " 4alpha=" + std::to_string(4 * alpha) +
                ", " + fmt_seconds(s));
}

void alpha_and_order_bounds(const VerifyOptions& o) {
    Clock t;
    const auto level8 = all_graphs(8);
    const bool count_ok = level8.size() == known_graph_count(8) && level8.size() == 12346;
    const auto a = verify_alpha_bound(exhaustive(8), o);
    const auto b = verify_order_bound(exhaustive(8), o);
    const double s = t.seconds();
    const bool pass = count_ok && a.ok() && b.ok() && a.counts.skipped == 0 && b.counts.skipped == 0 &&
                      a.counts.holds == a.counts.checked && b.counts.holds == b.counts.checked && s < kBudgetBounds;
    verdict(3, "alpha bound and order bound, all graphs n<=8", pass,
            std::to_string(level8.size()) + " classes at n=8; alpha: " + counts(a) + "; order: " + counts(b) + "; " +
                fmt_seconds(s));
    dump(a);
    dump(b);
}

void strong_coloring(const VerifyOptions& o) {
    Clock t;
    const auto r = verify_strong_color_bound(exhaustive(8), o);
    const bool pass = r.ok() && r.counts.skipped == 0 && r.counts.holds == r.counts.checked - r.counts.vacuous;
    verdict(4, "strong colouring with r = 3 Delta, all partitions, n<=8", pass, counts(r) + "; " + fmt_seconds(t.seconds()));
    dump(r);
}

void transversal(const VerifyOptions& o) {
    Clock t;
    VerifyOptions v = o;
    v.transversal_instances = kMinTransversal;
    const auto r = verify_transversal_agreement(v);
    const bool pass = r.ok() && r.counts.checked >= kMinTransversal && r.counts.holds == r.counts.checked &&
                      r.counts.skipped == 0;
    verdict(5, "independent transversal vs enumeration", pass, counts(r) + "; " + fmt_seconds(t.seconds()));
    dump(r);
}

void choosability(const VerifyOptions& o) {
    Clock t;
    const auto lemmas = verify_choosability_lemmas(o);
    const double s1 = t.seconds();
    Clock t2;
    const auto pot = verify_small_pot(o);
    const double s2 = t2.seconds();
    // Skips are budget give-ups of the uncapped cross-check, counted and shown.
    const bool pass = lemmas.ok() && pot.ok() && lemmas.counts.skipped == 0 &&
                      lemmas.counts.holds == lemmas.counts.checked - lemmas.counts.vacuous &&
                      pot.counts.holds == pot.counts.checked - pot.counts.vacuous;
    verdict(6, "choosability lemma table and small pot", pass,
            "lemmas: " + counts(lemmas) + ", " + fmt_seconds(s1) + "; small pot: " + counts(pot) + ", " +
                fmt_seconds(s2));
    dump(lemmas);
    dump(pot);
}

void decomposition(const VerifyOptions& o) {
    Clock t;
    VerifyOptions v = o;
    v.decomposition_instances = kMinDecomposition;
    v.keep_checks = true;
    const auto r = verify_decompositions(v);
    int cluster = 0, decomposed = 0;
    for (const auto& c : r.checks) {
        if (c.theorem_id == "x-t-cluster") ++cluster;
        else if (c.hypotheses_hold) ++decomposed;
    }
    const bool pass = r.ok() && r.counts.skipped == 0 && decomposed >= kMinDecomposition && cluster > 0 &&
                      r.counts.holds == r.counts.checked - r.counts.vacuous;
    verdict(7, "clique decompositions on overlapping cliques", pass,
            std::to_string(v.decomposition_instances) + " instances, " + std::to_string(decomposed) +
                " decompositions verified, " + std::to_string(cluster) + " X_t cluster checks; " + counts(r) + "; " +
                fmt_seconds(t.seconds()));
    dump(r);
}

void onesies(const VerifyOptions& o) {
    Clock t;
    const auto r = verify_onesies(exhaustive(8), o);
    const double s = t.seconds();
    const bool pass = r.ok() && r.counts.skipped == 0 && s < kBudgetOnesies;
    verdict(8, "onesies bounds (1)-(3) on vertex-critical graphs n<=8", pass, counts(r) + "; " + fmt_seconds(s));
    dump(r, 8);
}

void recolorer(const VerifyOptions& o) {
    Clock t;
    const auto r = verify_recolorer(o);
    const bool pass = r.ok() && r.counts.checked >= kMinRecolorer && r.counts.skipped == 0 &&
                      r.counts.holds == r.counts.checked - r.counts.vacuous;
    verdict(9, "recolorer end to end on clique unions", pass, counts(r) + "; " + fmt_seconds(t.seconds()));
    dump(r);
}

}  // namespace

int main() {
    VerifyOptions o;
    o.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    o.max_n = 8;
    o.seed = 1;

    Clock total;
    chi_cross_validation();
    m8_fixture();
    alpha_and_order_bounds(o);
    strong_coloring(o);
    transversal(o);
    choosability(o);
    decomposition(o);
    onesies(o);
    recolorer(o);
    std::printf("%d criteria failed, %s total\n", failures, fmt_seconds(total.seconds()).c_str());
    return failures ? 1 : 0;
}
