#include "doctest.h"
#include "mobius/gma.hpp"
#include "mobius/named.hpp"
#include "mobius/resolution.hpp"

using namespace mobius;

namespace {

StructuredAlgebra gma(const std::string& name) { return StructuredAlgebra(GmaAlgebra(named_instance(name).matroid)); }

using Entries = std::map<std::pair<int, int>, std::size_t>;

}  // namespace

TEST_CASE("k[y]/(y^2) and k[y]/(y^3) resolutions") {
    // k[y]/(y^2): one generator in each degree (i, i)
    const auto t2 = betti_table_of_k(StructuredAlgebra::truncated_polynomial(1), 5, 7);
    for (int i = 0; i <= 5; ++i) CHECK(t2.at(i, i) == 1);
    CHECK(t2.entries.size() == 6);
    // k[y]/(y^3): periodic 1, (1,1), (2,3), (3,4), (4,6)
    const auto t3 = betti_table_of_k(StructuredAlgebra::truncated_polynomial(2), 4, 6);
    CHECK(t3.entries == Entries{{{0, 0}, 1}, {{1, 1}, 1}, {{2, 3}, 1}, {{3, 4}, 1}, {{4, 6}, 1}});
}

TEST_CASE("steps = 0 gives the unit entry") {
    const auto t = betti_table_of_k(gma("fano"), 0, 2);
    CHECK(t.entries == Entries{{{0, 0}, 1}});
}

TEST_CASE("trampoline(3) table, two characteristics, checked differentials") {
    const Entries want{{{0, 0}, 1}, {{1, 1}, 9}, {{2, 2}, 53}, {{3, 3}, 260}, {{4, 4}, 1156}, {{4, 5}, 1}};
    for (std::uint32_t p : {32003U, 2U}) {
        ResolutionOptions o;
        o.max_step = 4;
        o.characteristic = p;
        o.verify = true;
        const auto r = resolve_residue_field(gma("trampoline3"), o);
        CHECK(r.table.entries == want);
        REQUIRE(r.check.has_value());
        CHECK(r.check->differential_squares_to_zero);
        CHECK(r.check->minimal);
    }
}

TEST_CASE("rational and modular tables agree") {
    for (const char* name : {"u23", "broken-trampoline3", "l23"}) {
        const auto a = gma(name);
        CHECK(betti_table_of_k(a, 3, 5, 0) == betti_table_of_k(a, 3, 5, 32003));
    }
    CHECK(cross_characteristic_check(gma("u24"), {2, 3, 5}, 3));
}

TEST_CASE("first step counts the atoms and linear syzygies") {
    for (const char* name : {"fano", "ag23", "whirl3", "betsy-ross"}) {
        const auto inst = named_instance(name);
        const auto t = betti_table_of_k(gma(name), 2, 3);
        CHECK(t.at(1, 1) == static_cast<std::size_t>(inst.matroid.ground_size()));
        CHECK(t.at(1, 2) == 0);
    }
    // non-quadratic: a cubic relation gives beta_{2,3} > 0
    CHECK(betti_table_of_k(gma("l23"), 2, 3).at(2, 3) > 0);
}

TEST_CASE("Hilbert series times Poincare series") {
    CHECK(check_hs_poincare_identity(gma("broken-trampoline3"), 4).vanishes());
    CHECK(check_hs_poincare_identity(StructuredAlgebra::truncated_polynomial(1), 5).vanishes());
    // the non-Koszul trampoline leaves a residual once the nonlinear entry appears
    CHECK_FALSE(check_hs_poincare_identity(gma("trampoline3"), 5).vanishes());
}

TEST_CASE("trampoline functional equation") {
    const auto r = check_trampoline_functional_equation(3, 4, 4);
    CHECK(r.vanishes());
    CHECK(r.coefficients_checked > 0);
    CHECK_THROWS_AS(check_trampoline_functional_equation(5, 2), SizeLimit);
}

TEST_CASE("Koszul probes") {
    const auto ag = koszul_probe(gma("ag23"), 4);
    CHECK_FALSE(ag.first_nonlinear.has_value());
    CHECK(ag.table.at(4, 4) == 3807);
    const auto t3 = koszul_probe(gma("trampoline3"), 4);
    REQUIRE(t3.first_nonlinear.has_value());
    CHECK(*t3.first_nonlinear == std::pair<int, int>{4, 5});
    CHECK(t3.linear_through == 3);
}

TEST_CASE("cyclic quotients") {
    const auto a = gma("u23");
    // A / (0) = A: free module
    const auto free = betti_table_of_cyclic_quotient(a, {}, 3, 5);
    CHECK(free.entries == Entries{{{0, 0}, 1}});
    // A / (all atoms) = k
    std::vector<AlgebraElement> atoms;
    for (int i : a.basis_of_degree(1)) atoms.push_back({{i, 1}});
    CHECK(betti_table_of_cyclic_quotient(a, atoms, 3, 5) == betti_table_of_k(a, 3, 5));
    // a non-key-homogeneous generator
    AlgebraElement sum;
    for (int i : a.basis_of_degree(1)) sum.emplace_back(i, 1);
    const auto t = betti_table_of_cyclic_quotient(a, {sum}, 2, 4);
    CHECK(t.at(0, 0) == 1);
    CHECK(t.at(1, 1) == 1);
}

TEST_CASE("algebras from product tables") {
    const auto a = StructuredAlgebra::from_products({0, 1, 1, 2}, {{1, 2, 3, 1}, {2, 1, 3, 1}});
    CHECK(a.hilbert_function() == std::vector<std::size_t>{1, 2, 1});
    // k[y1,y2]/(y1^2,y2^2): beta_i = i+1
    const auto t = betti_table_of_k(a, 3, 5);
    for (int i = 0; i <= 3; ++i) CHECK(t.at(i, i) == static_cast<std::size_t>(i + 1));
    CHECK_THROWS_AS(StructuredAlgebra::from_products({0, 1, 3}, {{1, 1, 2, 1}}), BadArgument);
}

TEST_CASE("tables render") {
    const auto t = betti_table_of_k(gma("trampoline3"), 4, 6);
    const auto text = t.to_text();
    CHECK(text.find("1,156") != std::string::npos);
    CHECK(text.find("--") != std::string::npos);
    CHECK(t.to_json().find("\"char\"") != std::string::npos);
}

TEST_CASE("block cap raises SizeLimit") {
    ResolutionOptions o;
    o.max_step = 4;
    o.block_cap = 10;
    CHECK_THROWS_AS(resolve_residue_field(gma("trampoline3"), o), SizeLimit);
}
