#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mobius/element_set.hpp"
#include "mobius/matroid.hpp"

namespace mobius {

// Simple undirected graph on at most 64 vertices. Edge ids follow insertion
// order after deduplication; edge endpoints are stored with u < v.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);
    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    // Returns the edge id; an existing edge keeps its id.
    int add_edge(int u, int v);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int id) const { return edges_[id]; }
    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    // -1 when absent.
    int edge_id(int u, int v) const;
    ElementSet neighbors(int v) const { return adj_[v]; }
    ElementSet closed_neighborhood(int v) const { return adj_[v].with(v); }
    ElementSet vertices() const { return ElementSet::full(n_); }
    bool is_clique(ElementSet vs) const;

    Graph induced(ElementSet vs, std::vector<int>* original = nullptr) const;

private:
    int n_ = 0;
    std::vector<ElementSet> adj_;
    std::vector<std::pair<int, int>> edges_;
    std::map<std::pair<int, int>, int> edge_ids_;
};

// Cycle matroid: ground set = edge ids, circuits = edge sets of cycles.
Matroid cycle_matroid(const Graph& g);

// Vertex order v_1..v_n (v_1 eliminated first).
using VertexOrder = std::vector<int>;
// Edge ids, most-preceding first.
using EdgeOrder = std::vector<int>;

struct ChordalityResult {
    std::optional<VertexOrder> perfect_elimination_order;
    // Vertex sequence of a chordless cycle of length >= 4 when not chordal.
    std::vector<int> chordless_cycle;
    bool chordal() const { return perfect_elimination_order.has_value(); }
};

ChordalityResult is_chordal(const Graph& g);
bool is_perfect_elimination_order(const Graph& g, const VertexOrder& order);

bool is_simple_vertex(const Graph& g, int v, ElementSet alive);
std::vector<int> simple_vertices(const Graph& g);

// Simple elimination order found by peeling the lowest-id simple vertex.
std::optional<VertexOrder> is_strongly_chordal(const Graph& g);

struct TrampolineWitness {
    int n = 0;
    // Graph vertices playing v_1..v_n followed by w_1..w_n.
    std::vector<int> vertex_map;
};

inline constexpr int kTrampolineSearchCap = 16;

// Induced n-trampoline (n >= 3) in a chordal graph. Throws BadArgument when
// the graph is not chordal and SizeLimit when |V| exceeds `cap` and no
// witness was found.
std::optional<TrampolineWitness> find_induced_trampoline(const Graph& g, int cap = kTrampolineSearchCap);

// Edge id -> positive label.
using MatLabeling = std::vector<int>;

std::optional<MatLabeling> mat_labeling(const Graph& g);

struct MatViolation {
    int condition = 0;  // 1, 2 or 3
    int level = 0;
    int edge = -1;
};

std::optional<MatViolation> mat_labeling_violation(const Graph& g, const MatLabeling& labels);
inline bool verify_mat_labeling(const Graph& g, const MatLabeling& labels) {
    return !mat_labeling_violation(g, labels).has_value();
}

std::optional<EdgeOrder> strong_edge_elimination_order(const Graph& g);
// Refinement of "larger label precedes" with ties by edge id.
EdgeOrder edge_order_from_labels(const MatLabeling& labels);

struct SeeoViolation {
    bool not_chordal = false;
    ElementSet cycle;  // edge ids
    int edge = -1;     // the element of the cycle lacking a MAT-triple
};

// Checks the strong edge elimination property. By default only 4-cycles are
// examined (sufficient once chordality holds); `all_cycles` checks every
// cycle of length >= 4.
std::optional<SeeoViolation> seeo_violation(const Graph& g, const EdgeOrder& order, bool all_cycles = false);
inline bool verify_seeo(const Graph& g, const EdgeOrder& order, bool all_cycles = false) {
    return !seeo_violation(g, order, all_cycles).has_value();
}

// Vertices v_1..v_n are 0..n-1 and w_1..w_n are n..2n-1; w_i ~ v_i, v_{i+1}.
Graph trampoline(int n);
// The n-trampoline without w_n.
Graph broken_trampoline(int n);

}  // namespace mobius
