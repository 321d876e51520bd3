#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "mobius/element_set.hpp"
#include "mobius/error.hpp"

namespace mobius {

// Total order on the ground set. position(e) gives the rank of e in the order;
// element(k) is the k-th smallest element (the most "preceding" one first).
class ElementOrder {
public:
    ElementOrder() = default;
    explicit ElementOrder(std::vector<int> sequence);
    static ElementOrder identity(int n);

    int size() const { return static_cast<int>(sequence_.size()); }
    int element(int k) const { return sequence_[k]; }
    int position(int e) const { return position_[e]; }
    bool precedes(int a, int b) const { return position_[a] < position_[b]; }
    // Order-minimum of a nonempty set.
    int min_of(ElementSet s) const;
    const std::vector<int>& sequence() const { return sequence_; }

private:
    std::vector<int> sequence_;
    std::vector<int> position_;
};

struct Flat {
    ElementSet elements;
    int rank = 0;
    auto operator<=>(const Flat&) const = default;
};

class Matroid;

// Lattice of flats, flats sorted by (rank, element bits).
class FlatLattice {
public:
    FlatLattice() = default;
    explicit FlatLattice(std::vector<Flat> flats);

    std::size_t size() const { return flats_.size(); }
    int rank() const { return static_cast<int>(by_rank_.size()) - 1; }
    const std::vector<Flat>& flats() const { return flats_; }
    const Flat& flat(std::size_t index) const { return flats_[index]; }
    // Indices (into flats()) of the flats of the given rank.
    std::span<const int> of_rank(int r) const { return by_rank_[r]; }
    std::vector<std::size_t> whitney_numbers() const;
    std::optional<int> index_of(ElementSet s) const;
    int bottom() const { return 0; }
    int top() const { return static_cast<int>(flats_.size()) - 1; }

    // Smallest flat containing both; linear scan, use GmaAlgebra for tables.
    int join(int a, int b) const;
    int meet(int a, int b) const;
    bool leq(int a, int b) const { return flats_[a].elements.subset_of(flats_[b].elements); }

private:
    std::vector<Flat> flats_;
    std::vector<std::vector<int>> by_rank_;
    std::unordered_map<ElementSet, int, ElementSetHash> index_;
};

struct Minor;
struct Simplification;

// Matroid given by its circuits. Immutable after construction.
class Matroid {
public:
    Matroid() = default;

    // Canonicalizes (sorts, deduplicates, drops non-minimal sets) and checks
    // the circuit elimination axiom; throws AxiomViolation on failure.
    static Matroid from_circuits(int ground_size, std::vector<ElementSet> circuits);
    // Skips the elimination-axiom check; for circuits produced by trusted
    // constructions (cycles of a graph, minors of a valid matroid).
    static Matroid from_trusted_circuits(int ground_size, std::vector<ElementSet> circuits);
    // Simple rank-3 matroid whose nontrivial lines are given.
    static Matroid rank3_from_lines(int ground_size, const std::vector<ElementSet>& lines);
    static Matroid uniform(int rank, int n);

    int ground_size() const { return n_; }
    ElementSet ground() const { return ElementSet::full(n_); }
    const std::vector<ElementSet>& circuits() const { return circuits_; }
    // Circuits containing element e.
    const std::vector<int>& circuits_through(int e) const { return by_element_[e]; }
    bool is_circuit(ElementSet s) const { return circuit_index_.contains(s); }

    bool is_simple() const;
    bool is_independent(ElementSet s) const;
    int rank(ElementSet s) const;
    int rank() const { return rank(ground()); }
    // Greedy basis of s in element-id order (lexicographically smallest).
    ElementSet basis_of(ElementSet s) const;
    ElementSet closure(ElementSet s) const;
    bool is_flat(ElementSet s) const { return closure(s) == s; }

    FlatLattice flats(std::size_t cap = 2'000'000) const;

    Minor restriction(ElementSet x) const;
    Minor contraction(ElementSet x) const;
    Simplification simplification() const;

    std::vector<ElementSet> broken_circuits(const ElementOrder& order) const;
    // Independent sets containing no broken circuit, up to the given size.
    std::vector<ElementSet> nbc_sets(const ElementOrder& order, int max_size,
                                     std::size_t cap = 5'000'000) const;

    // Checks the elimination axiom on all circuit pairs (or `samples` random
    // pairs when the ground set is larger than 20). Returns a witness pair.
    std::optional<std::pair<ElementSet, ElementSet>> elimination_violation(int samples = 1000) const;

private:
    void index();

    int n_ = 0;
    std::vector<ElementSet> circuits_;
    std::vector<std::vector<int>> by_element_;
    std::unordered_map<ElementSet, int, ElementSetHash> circuit_index_;
};

// A minor together with the original id of each of its elements.
struct Minor {
    Matroid matroid;
    std::vector<int> original;
};

struct Simplification {
    Matroid matroid;
    // Old element id -> new element id, -1 for loops.
    std::vector<int> class_of;
};

}  // namespace mobius
