#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mobius/matroid.hpp"

namespace mobius {

// Graded Moebius algebra: basis y_F over the flats F (indices into the
// lattice), deg y_F = rk F, and y_F y_G = y_{F v G} when ranks add, else 0.
class GmaAlgebra {
public:
    GmaAlgebra() = default;
    // Throws NotSimple.
    explicit GmaAlgebra(Matroid m, std::size_t flat_cap = 2'000'000);

    const Matroid& matroid() const { return m_; }
    const FlatLattice& lattice() const { return lattice_; }
    int dimension() const { return static_cast<int>(lattice_.size()); }
    int degree(int flat) const { return lattice_.flat(flat).rank; }
    int top_degree() const { return lattice_.rank(); }
    std::vector<std::size_t> hilbert_function() const { return lattice_.whitney_numbers(); }

    int atom(int e) const { return atom_[e]; }
    int join_element(int flat, int e) const { return atom_join_[static_cast<std::size_t>(flat) * n_ + e]; }
    int join(int a, int b) const;
    // Index of y_F y_G in the basis, or -1 when the product vanishes.
    int product(int a, int b) const {
        if (!table_.empty()) return table_[static_cast<std::size_t>(a) * dimension() + b];
        const int j = join(a, b);
        return degree(j) == degree(a) + degree(b) ? j : -1;
    }
    // Flat spanned by an arbitrary set of elements.
    int flat_of(ElementSet s) const;
    // Lexicographically smallest basis I_F, so that y_F = y_{I_F}.
    ElementSet canonical_monomial(int flat) const { return canonical_[flat]; }
    // Image of the squarefree monomial y_S: the flat when S is independent.
    int monomial_value(ElementSet s) const;

private:
    Matroid m_;
    FlatLattice lattice_;
    int n_ = 0;
    std::vector<int> atom_;
    std::vector<int> atom_join_;
    std::vector<int> table_;
    std::vector<ElementSet> canonical_;
};

// y_{C - i} - y_{C - j}.
struct CircuitBinomial {
    ElementSet circuit;
    int i = -1;
    int j = -1;
};

// y_I - y_J for independent I, J with equal closure.
struct ClosureBinomial {
    ElementSet lhs;
    ElementSet rhs;
};

struct PresentationIdeal {
    int variables = 0;
    std::vector<int> squares;
    // Canonical form: j = min C, one binomial per i in C - min C.
    std::vector<CircuitBinomial> circuit_binomials;
    // Cross-check form (filled on request): circuit monomials and, per flat,
    // y_I - y_{I_F} over the other bases I of F.
    std::vector<ElementSet> stanley_reisner;
    std::vector<ClosureBinomial> closure_binomials;
};

PresentationIdeal presentation(const Matroid& m, bool with_closure_form = false);
std::string presentation_text(const PresentationIdeal& p);
std::string presentation_json(const PresentationIdeal& p);

// A fine-graded piece where quadratic generation fails: degree d part of
// the squarefree image of Q supported on flat `flat`.
struct QuadraticityWitness {
    ElementSet flat;
    int degree = 0;
};

std::optional<QuadraticityWitness> quadraticity_failure(const Matroid& m, std::size_t subset_cap = 50'000'000);
inline bool is_quadratic(const Matroid& m) { return !quadraticity_failure(m).has_value(); }

bool is_c_chordal(const Matroid& m);
bool is_t_chordal(const Matroid& m);
bool is_line_closed(const Matroid& m, std::size_t cap = 2'000'000);

// Dimensions of (0 : y_a) per degree, computed as a kernel and as the ideal
// spanned by the contraction binomials; for C-chordal matroids also from the
// linear forms y_j - y_i over triangles {a, i, j}.
struct ColonIdealReport {
    int element = -1;
    std::vector<std::size_t> kernel_dims;
    std::vector<std::size_t> generated_dims;
    std::optional<std::vector<std::size_t>> linear_form_dims;
    // Linear generators y_j - y_i as pairs (i, j); y_a itself is implied.
    std::vector<std::pair<int, int>> linear_generators;
};

// Throws MismatchBug when the computations disagree.
ColonIdealReport colon_ideal_basis(const GmaAlgebra& a, int element);

// Algebra of si(M/a); verifies its Hilbert function against the quotient
// by the colon ideal. Throws MismatchBug.
GmaAlgebra quotient_by_colon(const GmaAlgebra& a, int element);

}  // namespace mobius
