#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mobius/graph.hpp"
#include "mobius/matroid.hpp"

namespace mobius {

// Monomial ideal of the form (y_i^2) + (squarefree monomials). Squarefree
// generators are kept minimal under divisibility and sorted.
struct MonomialIdealSummary {
    int variables = 0;
    std::vector<ElementSet> squarefree;
    // degree -> number of minimal generators (squares included).
    std::map<int, int> degree_histogram;

    bool quadratic() const { return degree_histogram.empty() || degree_histogram.rbegin()->first <= 2; }
};

// Lex order with y_u > y_v iff u precedes v.
MonomialIdealSummary lex_initial_ideal(const Matroid& m, const ElementOrder& order);

// Pair index giving, for u != v, the elements w with {u, v, w} a circuit.
class TriangleTable {
public:
    explicit TriangleTable(const Matroid& m);
    ElementSet third(int u, int v) const { return third_[static_cast<std::size_t>(u) * n_ + v]; }
    // Some u, v in s and w with {u, v, w} a circuit and w after min(u, v).
    bool has_mat_triple(ElementSet s, const ElementOrder& order) const;

private:
    int n_;
    std::vector<ElementSet> third_;
};

// Throws BadArgument when c is not a circuit.
bool is_mat_circuit(const Matroid& m, ElementSet c, const ElementOrder& order);

struct OrderCertificate {
    bool strong = false;
    // A circuit of size >= 4 that is not a MAT-circuit.
    std::optional<ElementSet> witness;
};

// Both criteria (MAT-circuits and quadratic initial ideal) are evaluated;
// throws MismatchBug if they disagree.
OrderCertificate certify_order(const Matroid& m, const ElementOrder& order);
inline bool is_strong_elimination_order(const Matroid& m, const ElementOrder& order) {
    return certify_order(m, order).strong;
}

enum class SearchStrategy { Exhaustive, DfsPruned, GraphicMat };
enum class SearchOutcome { Found, ExhaustedNone, TimedOut };

SearchStrategy parse_strategy(const std::string& s);
std::string to_string(SearchStrategy s);
std::string to_string(SearchOutcome o);

struct SearchOptions {
    int threads = 1;
    int exhaustive_cap = 10;
    // Node budget for dfs_pruned; exceeding it reports TimedOut.
    std::uint64_t node_budget = 2'000'000'000;
    // Graph for graphic_mat; its edge ids must be the matroid's elements.
    const Graph* graph = nullptr;
};

struct SearchReport {
    SearchOutcome outcome = SearchOutcome::ExhaustedNone;
    std::optional<ElementOrder> order;
    // Complete orders that were checked.
    std::uint64_t orders_examined = 0;
    // Prefixes visited and prefixes cut off (dfs_pruned).
    std::uint64_t nodes = 0;
    std::uint64_t pruned = 0;
    // The 4-circuit that failed most often among examined orders.
    std::optional<ElementSet> witness_circuit;

    std::string to_json() const;
};

// Throws SizeLimit for exhaustive search above the cap and BadArgument for
// graphic_mat without a graph.
SearchReport search_strong_elimination_order(const Matroid& m, SearchStrategy strategy,
                                             const SearchOptions& options = {});

// Checks with rational arithmetic that all S-pairs of the generators
// squares + circuit monomials + closure binomials with lcm degree at most
// degree_cap reduce to zero under the lex order. Throws SizeLimit for more
// than 8 elements.
bool buchberger_oracle(const Matroid& m, const ElementOrder& order, int degree_cap);

}  // namespace mobius
