#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcol/graph.hpp"
#include "gcol/oracles.hpp"
#include "gcol/rational.hpp"

namespace gcol {

/// Neighbours v of z (among coloured vertices) whose colour appears on no
/// other coloured neighbour of z. Uncoloured vertices (colour 0) are
/// treated as absent, so a colouring of G - x stored on G works directly.
VertexSet compute_Oz(const Graph& g, const Coloring& pi, Vertex z);

struct RecolorOptions {
    OracleLimits limits{64};
    /// Record chi(core) and chi(core - xw) in the trace.
    bool certify_critical = true;
};

struct RecolorOutcome {
    std::optional<Coloring> coloring;
    int colors = 0;
    bool hypotheses_hold = false;
    std::vector<std::string> flags;
    /// The exact oracle produced the final colouring.
    bool fallback = false;
    /// "complete" when the transversal swap ran, otherwise the stage that
    /// ended the constructive path (e.g. "reduction", "no-conflict",
    /// "normalization", or the stage that handed over to the oracle).
    std::string stage;
    /// One JSON object per stage.
    std::vector<std::string> trace;
};

/// (k-1)-colouring by the big-clique recolouring procedure. k defaults to
/// Delta(g). Hypotheses k >= 9, Delta <= k, omega < k, rho <= k/3 - 2 are
/// checked and flagged; any stage that cannot proceed hands over to the
/// exact oracle and says so. Every returned colouring is verified.
RecolorOutcome color_delta_minus_1(const Graph& g, int k = -1, const RecolorOptions& options = {});

/// (gamma-k)-colouring by the general procedure (gamma defaults to Delta).
/// While Delta < gamma the pair steps down to (gamma-1, k-1); k reaching 0
/// ends in the Brooks case.
RecolorOutcome color_delta_minus_k(const Graph& g, int k, int gamma = -1, const RecolorOptions& options = {});

struct OnesiesReport {
    Vertex v = 0;
    int k = 0;
    int n = 0;
    int delta = 0;
    int alpha = 0;
    Coloring pi;  // (Delta-k)-colouring of g - v, v uncoloured
    VertexSet h;  // H_v in g
    int h_order = 0;
    int h_min_degree = 0;
    int h_size = 0;
    // (1) |H| >= Delta - 2k
    int bound1 = 0;
    // (2) delta(H) >= |H| - (k+1)(alpha-1) - 1
    int bound2 = 0;
    // (3) ||H|| >= |H|(|H|-(k+2)) - (k+1)(n+2k-(Delta+1)), as stated
    int bound3 = 0;
    // (3*) 2||H|| >= |H|(|H|-(k+2)) - (k+1)(n+2k-(2 Delta+1)), what the
    // double count over H actually gives
    int bound3_corrected = 0;
    bool holds1 = false, holds2 = false, holds3 = false, holds3_corrected = false;
};

/// Builds H_v from an oracle (Delta-k)-colouring of g - v. Throws
/// HypothesisError unless g is vertex-critical with chi = Delta + 1 - k.
OnesiesReport onesies_subgraph(const Graph& g, Vertex v, int k, const OracleLimits& limits = {});

struct IrregularOutcome {
    enum class Kind { Clique, IrregularCritical, NotFound, HypothesisUnmet };
    Kind kind = Kind::NotFound;
    /// The K_k, or the irregular critical subgraph, in g's indices.
    VertexSet vertices;
    std::vector<std::string> flags;
    std::string detail;
};

std::string to_string(IrregularOutcome::Kind kind);

/// Follows the reduction: a K_k if present, else a vertex-critical G inside
/// g, v in no (k-1)-clique, a largest admissible colour class T of G - v,
/// and a (k-1)-critical subgraph H' of G - T, checked for chi = Delta =
/// k-1 and irregularity. k < 9 runs with a flag.
IrregularOutcome irregular_reduction(const Graph& g, int k, const OracleLimits& limits = {});

}  // namespace gcol
