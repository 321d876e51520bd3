#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mobius/gma.hpp"

namespace mobius {

// (basis index, integer coefficient) terms.
using AlgebraElement = std::vector<std::pair<int, long long>>;

// Finite-dimensional graded algebra with a monomial multiplication table:
// the product of two basis elements is zero or an integer multiple of a
// basis element. Basis elements carry a key in a join-semilattice so that
// key(x y) = key(x) v key(y); for graded Moebius algebras the key of y_F is
// F. Basis element 0 is the unit.
class StructuredAlgebra {
public:
    struct Product {
        int index = -1;
        long long coef = 0;
    };

    StructuredAlgebra() = default;
    // Throws SizeLimit above 4000 basis elements.
    explicit StructuredAlgebra(const GmaAlgebra& a);
    // Products not listed are zero; products with the unit are implied.
    // Throws BadArgument when the table is not graded or not generated in
    // degree one.
    static StructuredAlgebra from_products(std::vector<int> degrees,
                                           const std::vector<std::tuple<int, int, int, long long>>& products);
    // k[y] / (y^(top+1)).
    static StructuredAlgebra truncated_polynomial(int top);

    int dimension() const { return static_cast<int>(degree_.size()); }
    int degree(int i) const { return degree_[i]; }
    int top_degree() const { return static_cast<int>(by_degree_.size()) - 1; }
    const std::vector<int>& basis_of_degree(int d) const {
        static const std::vector<int> empty;
        return d >= 0 && d < static_cast<int>(by_degree_.size()) ? by_degree_[d] : empty;
    }
    std::vector<std::size_t> hilbert_function() const;

    int key(int i) const { return key_[i]; }
    int key_count() const { return key_count_; }
    int key_join(int a, int b) const { return key_join_[static_cast<std::size_t>(a) * key_count_ + b]; }
    Product product(int i, int j) const {
        const std::size_t at = static_cast<std::size_t>(i) * dimension() + j;
        return {prod_index_[at], prod_coef_[at]};
    }
    // Same algebra with every key equal.
    StructuredAlgebra with_trivial_keys() const;
    // True when all terms of x share one key.
    bool key_homogeneous(const AlgebraElement& x) const;

private:
    void finish();

    std::vector<int> degree_;
    std::vector<std::vector<int>> by_degree_;
    std::vector<int> key_;
    int key_count_ = 1;
    std::vector<int> key_join_{0};
    std::vector<int> prod_index_;
    std::vector<long long> prod_coef_;
};

struct BettiTable {
    // (i, j) -> beta_{i,j}; only nonzero entries are stored.
    std::map<std::pair<int, int>, std::size_t> entries;
    std::uint32_t characteristic = 32003;
    int max_step = 0;
    // Largest internal degree computed at each step 0..max_step.
    std::vector<int> degree_caps;

    std::size_t at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    // Sum over computed internal degrees.
    std::size_t total(int i) const;
    bool computed(int i, int j) const {
        return i >= 0 && i <= max_step && j <= degree_caps[i];
    }
    // Column i, row j - i, "--" for zero.
    std::string to_text() const;
    std::string to_json() const;
    bool operator==(const BettiTable& o) const { return entries == o.entries && max_step == o.max_step; }
};

struct ResolutionOptions {
    int max_step = 3;
    // Internal degree cap for every step; -1 for none.
    int degree_cap = -1;
    // Cap j <= i + strand_cap at step i; -1 for none. With both caps unset
    // the degree cap defaults to max_step + 2.
    int strand_cap = -1;
    // 0 selects rational arithmetic.
    std::uint32_t characteristic = 32003;
    int threads = 1;
    // Checks d^2 = 0 and minimality of every differential.
    bool verify = false;
    // Bound on the number of basis vectors of one elimination block.
    std::size_t block_cap = 50'000'000;
    // Called after each (step, internal degree) with the Betti number found.
    std::function<void(int step, int degree, long long beta)> progress;
};

struct ResolutionCheck {
    bool differential_squares_to_zero = true;
    bool minimal = true;
    std::size_t differentials_checked = 0;
};

struct ResolutionResult {
    BettiTable table;
    std::optional<ResolutionCheck> check;
    // Rows reduced over all elimination blocks.
    std::size_t vectors_reduced = 0;
};

// Minimal resolution of the residue field. Throws SizeLimit, MismatchBug.
ResolutionResult resolve_residue_field(const StructuredAlgebra& a, const ResolutionOptions& options);
BettiTable betti_table_of_k(const StructuredAlgebra& a, int max_step, int max_internal_degree,
                            std::uint32_t characteristic = 32003, int threads = 1);

// Minimal resolution of A / (generators) as an A-module. Generators must be
// homogeneous of positive degree; non-key-homogeneous generators fall back
// to the plain degree grading.
ResolutionResult resolve_cyclic_quotient(const StructuredAlgebra& a, const std::vector<AlgebraElement>& generators,
                                         const ResolutionOptions& options);
BettiTable betti_table_of_cyclic_quotient(const StructuredAlgebra& a, const std::vector<AlgebraElement>& generators,
                                          int max_step, int max_internal_degree,
                                          std::uint32_t characteristic = 32003);

std::vector<std::size_t> hilbert_series(const StructuredAlgebra& a);

// Coefficients of s^j t^i, keyed by (i, j).
using BiSeries = std::map<std::pair<int, int>, long long>;
BiSeries poincare_series(const BettiTable& t);

struct KoszulProbe {
    int linear_through = 0;
    std::optional<std::pair<int, int>> first_nonlinear;
    BettiTable table;
};

// Resolves with j <= i + strand_cap.
KoszulProbe koszul_probe(const StructuredAlgebra& a, int max_step, int strand_cap = 2,
                         std::uint32_t characteristic = 32003, int threads = 1);

struct ResidualReport {
    // (i, j, value) for the nonzero coefficients; j = 0 for series in t.
    std::vector<std::tuple<int, int, long long>> nonzero;
    std::size_t coefficients_checked = 0;
    bool vanishes() const { return nonzero.empty(); }
    std::string to_json() const;
};

// Coefficients of t^1..t^max_step in HS_A(t) P(-t) - 1, with P(t) the sum
// of beta_i t^i, beta_i totalled over the computed internal degrees.
ResidualReport check_hs_poincare_identity(const StructuredAlgebra& a, int max_step,
                                          std::uint32_t characteristic = 32003, int threads = 1);
ResidualReport hs_poincare_residual(const StructuredAlgebra& a, const BettiTable& t);

// P_T (1 - st - st P_{B/(y_a)}) - P_B for the n-trampoline T, its broken
// version B and a = v_1 v_n, over all (i, j) with i <= max_step and
// j <= degree_cap. Throws SizeLimit for n > 4.
ResidualReport check_trampoline_functional_equation(int n, int max_step, int degree_cap = -1,
                                                    std::uint32_t characteristic = 32003, int threads = 1);

// Betti tables agree for all listed primes.
bool cross_characteristic_check(const StructuredAlgebra& a, const std::vector<std::uint32_t>& primes, int max_step,
                                int max_internal_degree = -1, int threads = 1);

}  // namespace mobius
