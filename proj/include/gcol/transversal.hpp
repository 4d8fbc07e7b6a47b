#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcol/graph.hpp"
#include "gcol/rational.hpp"

namespace gcol {

/// Blocks V_0..V_{r-1}: nonempty, pairwise disjoint, covering 0..n-1.
class VertexPartition {
public:
    VertexPartition() = default;
    /// Throws InvalidArgument unless the blocks partition 0..n-1.
    VertexPartition(int n, std::vector<VertexSet> blocks);

    int order() const { return static_cast<int>(block_of_.size()); }
    int size() const { return static_cast<int>(blocks_.size()); }
    const std::vector<VertexSet>& blocks() const { return blocks_; }
    VertexSet block(int i) const { return blocks_[i]; }
    int block_of(Vertex v) const { return block_of_[v]; }

private:
    std::vector<VertexSet> blocks_;
    std::vector<int> block_of_;
};

/// One line per block, vertex indices separated by spaces.
VertexPartition parse_partition(std::string_view text, int n);
std::string serialize_partition(const VertexPartition& p);

struct DominationCertificate {
    std::vector<int> blocks;  // J, sorted
    EdgeList matching;        // M
    Edge root;                // the edge xy the construction started from
    /// Edge-minimal spanning subgraph the certificate lives in; the verifier
    /// uses the input graph when absent.
    std::optional<Graph> host;
};

struct TransversalOutcome {
    std::optional<std::vector<Vertex>> transversal;  // one vertex per block, block order
    std::optional<DominationCertificate> certificate;
};

/// Lexicographically least independent transversal (in block order), or a
/// certificate built by edge-minimisation and the inductive construction.
/// Edges inside a block never matter and are ignored.
TransversalOutcome find_independent_transversal(const Graph& g, const VertexPartition& p);

/// Plain enumeration of the block product.
bool naive_transversal_exists(const Graph& g, const VertexPartition& p);

bool verify_transversal(const Graph& g, const VertexPartition& p, const std::vector<Vertex>& t);
bool verify_certificate(const Graph& g, const VertexPartition& p, const DominationCertificate& cert);

struct GuardedTransversal {
    std::optional<std::vector<Vertex>> transversal;
    bool hypotheses_hold = false;
    std::string violated;  // first failed hypothesis, empty when they hold
};

/// Transversal disjoint from S. Hypotheses of the lopsided lemma: t >= 1,
/// d(v) <= min(t, |V_i| - t) for v in V_i, |S| smaller than every block.
GuardedTransversal find_transversal_avoiding(const Graph& g, const VertexPartition& p, VertexSet s,
                                             const Rational& t);
/// Same search, hypotheses of the weakened-S variant: the lopsided degree
/// condition, |S| < |V_2| and V_1 not inside S (blocks sorted by size).
GuardedTransversal find_transversal_avoiding_weak(const Graph& g, const VertexPartition& p, VertexSet s,
                                                  const Rational& t);

/// Transversal avoiding the anchor's neighbours. Hypotheses: every block has
/// at least 2D vertices and fewer than 2D anchor neighbours, where D is
/// degree_bound (default Delta(h)) and must be at least Delta(h).
GuardedTransversal find_transversal_with_anchor(const Graph& h, const VertexPartition& p,
                                                VertexSet x_neighbors, int degree_bound = -1);

}  // namespace gcol
