#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gcol/graph.hpp"
#include "gcol/oracles.hpp"

namespace gcol {

/// lists[v] is the list of vertex v; colours are positive integers.
using ListAssignment = std::vector<std::vector<int>>;
/// demand[v] is the required list length at v.
using DemandFunction = std::vector<int>;

/// Union of all lists, sorted.
std::vector<int> pot(const ListAssignment& lists);

/// A proper colouring with c(v) in L(v), or nullopt when L is bad. The
/// returned Coloring stores actual list colours.
std::optional<Coloring> is_colorable_from_lists(const Graph& g, const ListAssignment& lists);

struct ChoosabilityOptions {
    int max_order = 10;
    /// When false every pot size is allowed (fresh colours never run out);
    /// used to cross-check the Small Pot bound.
    bool small_pot_cap = true;
    /// Drop vertices with f(v) > d(v) before searching; they can always be
    /// coloured last.
    bool reduce_easy_vertices = true;
    /// Search states allowed per verdict, 0 for no limit. Exceeding it
    /// throws BoundExceeded.
    std::uint64_t max_states = 0;
};

struct ChoosabilityVerdict {
    bool choosable = true;
    /// A bad f-assignment of minimum pot size when not choosable.
    std::optional<ListAssignment> witness;
    /// Search states expanded, summed over pot sizes.
    std::uint64_t states = 0;
    /// Largest pot size searched (-1 for the uncapped mode).
    int pot_searched = 0;
};

/// Exhaustive over f-assignments up to colour permutation. Throws
/// BoundExceeded above options.max_order and InvalidArgument on a demand
/// vector of the wrong length or negative entries.
ChoosabilityVerdict is_f_choosable(const Graph& g, const DemandFunction& f,
                                   const ChoosabilityOptions& options = {});
/// f(v) = max(0, d(v) - k).
DemandFunction dk_demand(const Graph& g, int k);
ChoosabilityVerdict is_dk_choosable(const Graph& g, int k, const ChoosabilityOptions& options = {});

/// First vertex set, by size then lexicographically, inducing a nonempty
/// d_k-choosable subgraph; nullopt certifies that none exists.
std::optional<VertexSet> has_induced_dk_choosable_subgraph(const Graph& g, int k,
                                                           const ChoosabilityOptions& options = {});

/// True iff every colouring of G_S from L uses a colour outside S, that is,
/// G_S has no colouring from the lists L(v) & S.
bool check_pot_colorability_closure(const Graph& g, const ListAssignment& lists,
                                    const std::vector<int>& s);

}  // namespace gcol
