#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "mobius/graph.hpp"

namespace mobius {

// The four conditions on one graph. The last two ask for an order of
// M(G): the one derived from a MAT-labeling, or else a search result.
struct EquivalenceRow {
    bool strongly_chordal = false;
    bool seeo_found = false;
    bool order_certified = false;
    bool initial_ideal_quadratic = false;
    // No decision could be reached within the search budget.
    bool undecided = false;

    bool agree() const {
        return !undecided && strongly_chordal == seeo_found && seeo_found == order_certified &&
               order_certified == initial_ideal_quadratic;
    }
};

// When dfs_pruned exceeds `node_budget` on a chordal graph, an induced
// trampoline is located and its edge set (a flat of M(G)) is searched
// instead: strong elimination orders restrict to flats.
EquivalenceRow strong_chordality_row(const Graph& g, std::uint64_t node_budget = 20'000'000);

struct SweepReport {
    std::size_t graphs = 0;
    std::size_t positives = 0;
    std::vector<std::size_t> exceptions;
    bool passed() const { return exceptions.empty(); }
};

SweepReport strong_chordality_sweep(const std::vector<Graph>& graphs, int threads = 1);
// is_quadratic(M(G)) against is_chordal(G).
SweepReport chordality_sweep(const std::vector<Graph>& graphs, int threads = 1);

// Vertex sets of the maximal cliques.
std::vector<ElementSet> maximal_cliques(const Graph& g);
// Empty when the labeling obeys the clique-label laws; otherwise a message.
std::string clique_label_violation(const Graph& g, const MatLabeling& labels);

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    int threads = 1;
    std::uint64_t seed = 20240601;
    // Criteria to run; empty runs all of 1..11.
    std::set<int> only;
    std::function<void(const CriterionResult&)> on_result;
};

inline constexpr int kCriterionCount = 11;

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

std::string manifest_text(const std::vector<CriterionResult>& results);
std::string manifest_json(const std::vector<CriterionResult>& results);

}  // namespace mobius
