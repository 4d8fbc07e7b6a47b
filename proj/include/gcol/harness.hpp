#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gcol/corpus.hpp"
#include "gcol/graph.hpp"
#include "gcol/oracles.hpp"
#include "gcol/rational.hpp"

namespace gcol {

struct Margin {
    std::string name;
    Rational value;
};

struct TheoremCheck {
    std::string theorem_id;
    /// Corpus index or instance label.
    std::string graph_id;
    std::string graph6;
    bool hypotheses_hold = false;
    bool conclusion_holds = true;
    std::vector<Margin> margins;
    std::string detail;
    /// Instance abandoned (oracle bound, search budget); counted, not judged.
    bool skipped = false;

    /// Hypotheses hold and the conclusion does not: a falsification.
    bool red() const { return !skipped && hypotheses_hold && !conclusion_holds; }
};

struct VerifyCounts {
    int checked = 0;
    int vacuous = 0;
    int holds = 0;
    int skipped = 0;
};

struct VerifyReport {
    std::string theorem;
    std::string corpus;
    VerifyCounts counts;
    std::vector<TheoremCheck> alerts;
    /// Summary lines (rates, caps hit); part of the report, deterministic.
    std::vector<std::string> notes;
    /// Every check, kept only when VerifyOptions::keep_checks is set.
    std::vector<TheoremCheck> checks;

    bool ok() const { return alerts.empty(); }
};

struct VerifyOptions {
    int jobs = 1;
    int max_n = 8;
    std::uint64_t seed = 1;
    OracleLimits limits{};
    bool keep_checks = false;
    /// Instance counts for the synthesised suites.
    int transversal_instances = 10000;
    int decomposition_instances = 1000;
    int recolorer_instances = 60;
    /// Partitions per graph for the strong colouring sweep before sampling.
    int partition_cap = 10000;
    /// Largest B in the neighbourhood lemma sweep (the slow one).
    int neighborhood_max_order = 7;
    /// Uncapped choosability searches give up past this many states.
    std::uint64_t small_pot_budget = 300;
};

/// Smallest integer m with 4m >= 15 + sqrt(48n + 73), exact.
int order_bound_term(int n);

/// Set partitions of {0..n-1} into at most max_blocks blocks of size at most
/// block_size, blocks in order of least element. Stops after limit + 1
/// partitions so callers can tell the set was larger than limit.
std::vector<std::vector<VertexSet>> bounded_partitions(int n, int block_size, int max_blocks,
                                                       std::size_t limit);

/// Runs fn(i) for i in [0, count) on `jobs` threads and concatenates the
/// results in index order.
std::vector<TheoremCheck> run_pool(int count, int jobs,
                                   const std::function<std::vector<TheoremCheck>(int)>& fn);

/// Folds checks into counts and alerts.
VerifyReport make_report(const std::string& theorem, const std::string& corpus,
                         std::vector<TheoremCheck> checks, bool keep_checks);

VerifyReport verify_alpha_bound(const CorpusSpec& corpus, const VerifyOptions& options = {});
VerifyReport verify_order_bound(const CorpusSpec& corpus, const VerifyOptions& options = {});
/// Two-thirds clique theorem, dense-neighbourhood Delta-1 theorem, the
/// clique-membership corollary (k >= 1) and the average-degree theorem
/// (k >= 0), each instance checked per graph; chi is only computed when a
/// hypothesis holds.
VerifyReport verify_dense_neighborhood_theorems(const CorpusSpec& corpus, const VerifyOptions& options = {});
/// Every graph with Delta >= 1, r = 3 Delta, padded to r * ceil(n/r) and
/// partitioned every way into parts of size r (sampled past partition_cap).
VerifyReport verify_strong_color_bound(const CorpusSpec& corpus, const VerifyOptions& options = {});
/// Independent transversal search against plain enumeration on random
/// partitioned graphs (n <= 10, at most 4 blocks); no-instances must come
/// with a certificate that verifies.
VerifyReport verify_transversal_agreement(const VerifyOptions& options = {});
/// k = 1 and general decompositions of random overlapping cliques, with
/// the cluster property of X_t checked whenever t >= 2(Delta+1)/3.
VerifyReport verify_decompositions(const VerifyOptions& options = {});
/// Every vertex-critical corpus graph, k = Delta + 1 - chi, every vertex.
VerifyReport verify_onesies(const CorpusSpec& corpus, const VerifyOptions& options = {});
/// The lemma instance table for d_k-choosability.
VerifyReport verify_choosability_lemmas(const VerifyOptions& options = {});
/// Capped (pot < n) and uncapped searches agree: all demand functions for
/// n <= 5, sampled ones for n = 6, 7.
VerifyReport verify_small_pot(const VerifyOptions& options = {});
/// color_delta_minus_1 with k = 9 on clique unions (two K_8, Delta <= 9,
/// up to two attached vertices).
VerifyReport verify_recolorer(const VerifyOptions& options = {});

/// Identifiers accepted by verify_theorem, in the order "all" runs them.
std::vector<std::string> theorem_ids();
/// The corpus a theorem id uses by default (exhaustive up to max_n where
/// that applies); nullopt for suites that synthesise their own instances.
std::optional<CorpusSpec> default_corpus(const std::string& id, const VerifyOptions& options);
/// Dispatch by id; corpus overrides the default where the suite takes one.
VerifyReport verify_theorem(const std::string& id, const std::optional<CorpusSpec>& corpus,
                            const VerifyOptions& options = {});

/// {"theorem", "corpus", "counts": {checked, vacuous, holds, skipped},
///  "alerts": [...], "notes": [...]}, keys in that order.
std::string report_to_json(const VerifyReport& report, bool include_checks = false);

}  // namespace gcol
