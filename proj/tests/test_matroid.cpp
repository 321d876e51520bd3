#include <random>

#include "doctest.h"
#include "mobius/io.hpp"
#include "mobius/matroid.hpp"
#include "mobius/named.hpp"

using namespace mobius;

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("element sets") {
    ElementSet s{0, 3, 5};
    CHECK(s.size() == 3);
    CHECK(s.first() == 0);
    CHECK(s.elements() == std::vector<int>{0, 3, 5});
    CHECK(s.without(0).first() == 3);
    CHECK((s & ElementSet{3, 4}) == ElementSet{3});
    CHECK(ElementSet::full(64).size() == 64);
}

TEST_CASE("uniform matroids have binomial Whitney numbers") {
    for (int n = 2; n <= 7; ++n)
        for (int r = 1; r <= n; ++r) {
            const auto w = Matroid::uniform(r, n).flats().whitney_numbers();
            REQUIRE(static_cast<int>(w.size()) == r + 1);
            for (int k = 0; k < r; ++k) CHECK(static_cast<long long>(w[k]) == binom(n, k));
            CHECK(w[r] == 1);
        }
}

TEST_CASE("Fano plane") {
    const Matroid f = fano();
    CHECK(f.ground_size() == 7);
    CHECK(f.rank() == 3);
    CHECK(f.circuits().size() == 14);
    CHECK(f.flats().whitney_numbers() == std::vector<std::size_t>{1, 7, 7, 1});
    CHECK(f.is_simple());
}

TEST_CASE("circuit axioms are enforced") {
    CHECK_THROWS_AS(Matroid::from_circuits(4, {ElementSet{0, 1, 2}, ElementSet{1, 2, 3}}), AxiomViolation);
    // non-minimal sets are dropped
    const Matroid m = Matroid::from_circuits(3, {ElementSet{0, 1, 2}, ElementSet{0, 1}});
    CHECK(m.circuits().size() == 1);
    CHECK_FALSE(m.is_simple());
}

TEST_CASE("closure and rank laws on named instances") {
    std::mt19937_64 rng(11);
    for (const auto& name : named_instance_names()) {
        const Matroid m = named_instance(name).matroid;
        const int n = m.ground_size();
        std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << n) - 1);
        for (int t = 0; t < 300; ++t) {
            const ElementSet x(pick(rng)), y(pick(rng));
            const ElementSet cx = m.closure(x);
            CHECK(x.subset_of(cx));
            CHECK(m.closure(cx) == cx);
            CHECK(m.rank(cx) == m.rank(x));
            CHECK(m.rank(x | y) + m.rank(x & y) <= m.rank(x) + m.rank(y));
            if (x.subset_of(y)) CHECK(cx.subset_of(m.closure(y)));
        }
        CHECK_FALSE(m.elimination_violation().has_value());
    }
}

TEST_CASE("restriction to a flat and contraction") {
    const Matroid f = fano();
    const ElementSet line = f.circuits().front();
    const auto r = f.restriction(line);
    CHECK(r.matroid.ground_size() == 3);
    CHECK(r.matroid.rank() == 2);
    const auto c = f.contraction(ElementSet::single(0));
    CHECK(c.matroid.rank() == 2);
    // si(F/p) is U(2,3)
    CHECK(c.matroid.simplification().matroid.flats().whitney_numbers() == std::vector<std::size_t>{1, 3, 1});
}

TEST_CASE("nbc sets count the characteristic polynomial coefficients") {
    // U(2,3): chi = t^2 - 3t + 2
    const Matroid u = Matroid::uniform(2, 3);
    const auto nbc = u.nbc_sets(ElementOrder::identity(3), 3);
    std::vector<int> by_size(4);
    for (ElementSet s : nbc) ++by_size[s.size()];
    CHECK(by_size == std::vector<int>{1, 3, 2, 0});
}

TEST_CASE("matroid JSON round trip and errors") {
    const Matroid m = l23();
    const Matroid back = parse_matroid_json(matroid_to_json(m));
    CHECK(back.circuits() == m.circuits());
    CHECK_THROWS_AS(parse_matroid_json("{"), ParseError);
    CHECK_THROWS_AS(parse_matroid_json(R"({"ground": 3})"), ParseError);
    CHECK_THROWS_AS(parse_matroid_json(R"({"ground": 3, "circuits": [[0, 5]]})"), ParseError);
    CHECK_THROWS_AS(parse_matroid_json(R"({"ground": 4, "circuits": [[0,1,2],[1,2,3]]})"), AxiomViolation);
}
