#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gcol/graph.hpp"

namespace gcol {

/// One representative per isomorphism class on n vertices, canonical form,
/// sorted by canonical graph6. Built by vertex addition from order n-1 and
/// deduplicated through canonical_graph6.
std::vector<Graph> all_graphs(int n);
/// all_graphs(0..max_n) concatenated.
std::vector<Graph> all_graphs_up_to(int max_n);

/// Number of non-isomorphic graphs on n vertices, n <= 10 (OEIS A000088).
std::uint64_t known_graph_count(int n);

/// G(n, p) with p = percent / 100, edges decided in lexicographic order by
/// integer draws so streams are reproducible across platforms.
Graph random_gnp(int n, int percent, std::mt19937_64& rng);

/// Named fixtures: M8, petersen, K<n>, C<n>, E<n>, P<n>, CP<m> (cocktail
/// party: K_2m minus a perfect matching).
Graph named_graph(const std::string& name);

struct CliqueUnionParams {
    int cliques = 2;
    int clique_size = 8;
    int max_degree = 9;
    /// Extra vertices, each joined to clique_size - 1 vertices of a clique.
    int attached = 0;
    /// Random cross pairs tried; an edge is kept while both ends stay
    /// within max_degree and lie in different cliques.
    int attempts = 200;
};

/// Disjoint cliques plus sparse random edges between them: the desk-scale
/// shape on which the big-clique recolouring hypotheses can hold.
Graph random_clique_union(const CliqueUnionParams& params, std::mt19937_64& rng);

/// K_a joined with every graph B on 1..min(5, max_order - a) vertices, for
/// a = min_a..max_a.
std::vector<Graph> clique_joins(int min_a, int max_a, int max_order);

struct OverlapParams {
    int max_order = 24;
    int min_delta = 9;
    int max_delta = 14;
};

/// One to three groups, each a clique, a clique with one vertex attached
/// to most of it, or two cliques sharing all but one vertex each; then
/// random edges between groups under a degree cap drawn from
/// [min_delta, max_delta]. Order stays within max_order.
Graph random_overlapping_cliques(const OverlapParams& params, std::mt19937_64& rng);

struct CorpusSpec {
    enum class Source { Exhaustive, Random, File, Family };
    Source source = Source::Exhaustive;
    int max_n = 6;
    int min_n = 0;
    int count = 100;
    int percent = 50;
    std::uint64_t seed = 1;
    std::string path;    // File
    /// Family: a named graph, "clique-union:<cliques>:<size>:<max degree>:<attached>"
    /// or "overlap" drawn `count` times from `seed`, or
    /// "clique-join:<min a>:<max a>:<max order>".
    std::string family;
    int min_delta = 0;
    int max_delta = 64;
    bool connected_only = false;

    std::string describe() const;
};

std::vector<Graph> generate_corpus(const CorpusSpec& spec);

}  // namespace gcol
