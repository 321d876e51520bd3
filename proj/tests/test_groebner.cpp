#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "mobius/corpus.hpp"
#include "mobius/gma.hpp"
#include "mobius/groebner.hpp"
#include "mobius/named.hpp"

using namespace mobius;

namespace {

// Strong elimination order by brute force over all permutations, using the
// definition directly: every circuit of size >= 4 is a MAT-circuit.
std::optional<ElementOrder> brute_force_order(const Matroid& m) {
    std::vector<int> seq(m.ground_size());
    std::iota(seq.begin(), seq.end(), 0);
    do {
        const ElementOrder o(seq);
        bool ok = true;
        for (ElementSet c : m.circuits())
            if (c.size() >= 4 && !is_mat_circuit(m, c, o)) {
                ok = false;
                break;
            }
        if (ok) return o;
    } while (std::next_permutation(seq.begin(), seq.end()));
    return std::nullopt;
}

}  // namespace

TEST_CASE("Fano point order is a strong elimination order") {
    const auto o = ElementOrder::identity(7);
    const auto cert = certify_order(fano(), o);
    CHECK(cert.strong);
    CHECK(lex_initial_ideal(fano(), o).quadratic());
}

TEST_CASE("AG(2,3) has no strong elimination order") {
    SearchOptions so;
    const auto ex = search_strong_elimination_order(ag23(), SearchStrategy::Exhaustive, so);
    CHECK(ex.outcome == SearchOutcome::ExhaustedNone);
    CHECK(ex.orders_examined == 362880);
    CHECK(ex.witness_circuit.has_value());
    const auto dfs = search_strong_elimination_order(ag23(), SearchStrategy::DfsPruned, so);
    CHECK(dfs.outcome == SearchOutcome::ExhaustedNone);
}

TEST_CASE("search strategies agree with brute force") {
    for (const char* name : {"u25", "u24", "l23", "whirl3", "example-2-1", "broken-trampoline3", "fano"}) {
        const Matroid m = named_instance(name).matroid;
        const auto brute = brute_force_order(m);
        const auto ex = search_strong_elimination_order(m, SearchStrategy::Exhaustive);
        const auto dfs = search_strong_elimination_order(m, SearchStrategy::DfsPruned);
        CHECK(ex.order.has_value() == brute.has_value());
        CHECK(dfs.order.has_value() == brute.has_value());
        if (brute) {
            CHECK(ex.order->sequence() == brute->sequence());
            CHECK(dfs.order->sequence() == brute->sequence());
        }
    }
}

TEST_CASE("example graph order") {
    const auto r = search_strong_elimination_order(cycle_matroid(example_2_1_graph()), SearchStrategy::DfsPruned);
    REQUIRE(r.order.has_value());
    CHECK(r.order->sequence() == std::vector<int>{0, 1, 3, 2, 4});
}

TEST_CASE("uniform matroids are vacuously strongly T-chordal") {
    const auto r = search_strong_elimination_order(Matroid::uniform(2, 5), SearchStrategy::DfsPruned);
    CHECK(r.outcome == SearchOutcome::Found);
}

TEST_CASE("graphic_mat agrees with dfs on small graphs") {
    for (const auto& g : connected_graphs(6)) {
        const Matroid m = cycle_matroid(g);
        SearchOptions so;
        so.graph = &g;
        const auto mat = search_strong_elimination_order(m, SearchStrategy::GraphicMat, so);
        const auto dfs = search_strong_elimination_order(m, SearchStrategy::DfsPruned);
        CHECK(mat.outcome == dfs.outcome);
        CHECK(mat.outcome == (is_strongly_chordal(g) ? SearchOutcome::Found : SearchOutcome::ExhaustedNone));
    }
}

TEST_CASE("orders certified by both criteria on random orders") {
    std::mt19937_64 rng(17);
    for (const char* name : {"fano", "trampoline3", "broken-trampoline4", "betsy-ross", "ag23"}) {
        const Matroid m = named_instance(name).matroid;
        std::vector<int> seq(m.ground_size());
        std::iota(seq.begin(), seq.end(), 0);
        for (int t = 0; t < 50; ++t) {
            std::shuffle(seq.begin(), seq.end(), rng);
            CHECK_NOTHROW(certify_order(m, ElementOrder(seq)));
        }
    }
}

TEST_CASE("Buchberger criterion holds for the circuit and closure binomials") {
    for (const char* name : {"u23", "u24", "l23", "whirl3", "fano", "broken-trampoline3", "example-2-1"}) {
        const Matroid m = named_instance(name).matroid;
        CHECK(buchberger_oracle(m, ElementOrder::identity(m.ground_size()), 6));
    }
    CHECK_THROWS_AS(buchberger_oracle(ag23(), ElementOrder::identity(9), 6), SizeLimit);
}

TEST_CASE("non-quadratic matroids are refuted at the root") {
    const auto r = search_strong_elimination_order(l23(), SearchStrategy::DfsPruned);
    CHECK(r.outcome == SearchOutcome::ExhaustedNone);
    CHECK(r.nodes <= 1);
}

TEST_CASE("node budget reports a timeout") {
    SearchOptions so;
    so.node_budget = 10;
    const auto r = search_strong_elimination_order(cycle_matroid(trampoline(4)), SearchStrategy::DfsPruned, so);
    CHECK(r.outcome == SearchOutcome::TimedOut);
}

TEST_CASE("strategy names") {
    CHECK(parse_strategy("dfs-pruned") == SearchStrategy::DfsPruned);
    CHECK(parse_strategy("graphic_mat") == SearchStrategy::GraphicMat);
    CHECK(to_string(SearchStrategy::Exhaustive) == "exhaustive");
    CHECK_THROWS_AS(parse_strategy("random"), BadArgument);
}
