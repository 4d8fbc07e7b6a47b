#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcol/graph.hpp"
#include "gcol/rational.hpp"

namespace gcol {

struct ThresholdParams {
    int k = 1;
    int omega = 0;
    int delta = 0;
    Rational U;
    Rational U_prime;
};

/// max{2/3 (D+1), (D+3k+2)/2, 2k/(2k+1) (w+k) - 1, (k+1)/(k+2) w + 2k + 1}.
/// Throws InvalidArgument for k < 1.
Rational threshold_U(int k, int omega, int delta);
/// max{U, (k+2)/(k+3) D + 1}.
Rational threshold_U_prime(int k, int omega, int delta);
ThresholdParams threshold_params(int k, int omega, int delta);

struct DecompositionBlock {
    VertexSet D;
    VertexSet C;
    VertexSet K;
    std::optional<Vertex> x;
};

struct CliqueDecomposition {
    Rational t;
    int k = 1;
    std::vector<DecompositionBlock> blocks;
    /// Hypotheses that did not hold, were unchecked, or were assumed.
    std::vector<std::string> flags;
    /// Every hypothesis was checked and holds; only then is a failed
    /// verification a falsification.
    bool hypotheses_verified = false;

    /// Block index of v, -1 when v lies in no block.
    int block_of(Vertex v) const;
    VertexSet covered() const;
};

struct DecompositionOptions {
    /// Throw HypothesisError on a failed hypothesis instead of flagging it.
    bool strict = false;
    /// Up to this order the "no induced d_k-choosable subgraph" hypothesis
    /// is decided by the choosability scanner; above it the caller vouches
    /// via assume_no_dk_choosable and the decomposition records that.
    int class_scan_order = 8;
    bool assume_no_dk_choosable = false;
};

/// The maximal cliques with at least ceil(t) vertices.
std::vector<VertexSet> big_cliques(const Graph& g, const Rational& t);

/// Blocks are the unions over the components of the intersection graph of
/// the big cliques. A component with one clique gives D = C = K; otherwise
/// D must be C + x for one of its cliques C (the largest, lexicographically
/// least among equals) and K = N(x) & C. The result is verified (both block
/// shapes and the outside-neighbour clause) before it is returned; a failed
/// verification throws FalsificationError when every hypothesis held and
/// HypothesisError otherwise.
CliqueDecomposition decompose_k1(const Graph& g, int t, const DecompositionOptions& options = {});
/// First violated property of a k = 1 decomposition, nullopt when valid.
std::optional<std::string> check_decomposition_k1(const Graph& g, const CliqueDecomposition& d);

/// D_i are the unions over components of the intersection graph X_t (which
/// must be a disjoint union of complete graphs), C_i the lexicographically
/// least maximum clique of G[D_i], K_i the universal vertices of G[D_i].
/// Verified: |D_i| <= w(G[D_i]) + 2k, |K_i| >= 3k+1, the clique-intersection
/// bound for independent sets of size at most k+1, alpha(G[D_i]) <= k+1.
CliqueDecomposition decompose_general(const Graph& g, int k, const Rational& t,
                                      const DecompositionOptions& options = {});
std::optional<std::string> check_decomposition_general(const Graph& g, const CliqueDecomposition& d);

/// Whether the intersection graph of the given cliques is a disjoint union
/// of complete graphs.
bool intersection_graph_is_cluster(const std::vector<VertexSet>& cliques);

/// {"t": "p/q", "k": k, "blocks": [{"D": [...], "C": [...], "K": [...], "x": v|null}]}
std::string decomposition_to_json(const CliqueDecomposition& d);

/// Vertex connectivity from unit-capacity max-flow over the split-vertex
/// digraph (Boost.Graph Edmonds-Karp), min over nonadjacent pairs.
/// Independent of the separator enumeration in vertex_connectivity.
int vertex_connectivity_by_flow(const Graph& g);

struct MaderResult {
    VertexSet vertices;  // in g
    Graph subgraph;
    Rational average_degree;
    int connectivity = 0;
};

/// Induced (k+1)-connected subgraph with average degree > d(g) - 2k.
/// Peel vertices while the average stays above the target, split along
/// small separators when connectivity falls short, and fall back to a
/// plain subset scan for small orders. Throws HypothesisError when
/// d(g) < 4k and FalsificationError if nothing is found.
MaderResult mader_dense_subgraph(const Graph& g, int k);

struct DenseLemmaCheck {
    std::string lemma;
    bool hypothesis = false;
    /// Conclusion confirmed (trivially true when the hypothesis fails).
    bool holds = true;
    /// Vertex set H of b for the witness lemmas.
    std::optional<VertexSet> witness;
    std::string detail;
};

struct DenseNeighborhoodReport {
    int order = 0;
    Rational average_degree;
    int omega = 0;
    int min_degree = 0;
    std::vector<DenseLemmaCheck> checks;
};

/// Runs the three dense-neighbourhood lemmas on b:
///  low-vertex-high-average-degree (k = 1): d(b) >= w(b) + 2 gives H with
///    K_1 + H f-choosable, f = d at the apex and d - 1 on H;
///  vertex-high-average-degree (k = 1): d(b) >= w(b) + 3 gives H with
///    K_1 + H d_1-choosable;
///  high-min-degree-gives-clique: delta(b) >= (2k+1)/(2k+2)|b| + k - 1 and
///    K_1 + b not d_k-choosable force w(b) >= |b| - 2k.
/// Witnesses are searched by size, then lexicographically. A lemma whose
/// hypothesis holds but whose conclusion fails comes back with holds =
/// false. Throws BoundExceeded when |b| > max_order.
DenseNeighborhoodReport clique_from_dense_neighborhood(const Graph& b, int k, int max_order = 9);

}  // namespace gcol
