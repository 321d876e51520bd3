#pragma once

#include <cstdint>
#include <vector>

#include "mobius/graph.hpp"

namespace mobius {

// Canonical adjacency code: the lexicographically smallest upper-triangle
// bit string over vertex orders compatible with a degree refinement.
// Limited to 10 vertices.
std::uint64_t canonical_code(const Graph& g);

// One representative per isomorphism class of connected graphs on
// 1..max_vertices vertices (max_vertices <= 8).
std::vector<Graph> connected_graphs(int max_vertices);

struct RandomCorpusOptions {
    int count = 500;
    int min_vertices = 8;
    int max_vertices = 9;
    int max_edges = 20;
    std::uint64_t seed = 20240601;
};

// Connected graphs: half Erdos-Renyi, half random chordal (each new vertex
// joins a random clique of the current graph). Deterministic in the seed.
std::vector<Graph> random_graph_corpus(const RandomCorpusOptions& options = {});

// Random strongly chordal graph on n vertices: chordal samples are drawn
// until one passes is_strongly_chordal.
Graph random_strongly_chordal(int n, std::uint64_t seed);

}  // namespace mobius
