#include <algorithm>
#include <random>

#include "doctest.h"
#include "mobius/acceptance.hpp"
#include "mobius/corpus.hpp"
#include "mobius/graph.hpp"
#include "mobius/io.hpp"
#include "mobius/named.hpp"

using namespace mobius;

namespace {

// Induced cycle of length >= 4 by brute force over vertex subsets.
bool has_chordless_cycle(const Graph& g) {
    const int n = g.vertex_count();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        const ElementSet s(bits);
        if (s.size() < 4) continue;
        bool two_regular = true;
        s.for_each([&](int v) { two_regular = two_regular && (g.neighbors(v) & s).size() == 2; });
        if (!two_regular) continue;
        // connected 2-regular induced subgraph is a cycle
        ElementSet seen = ElementSet::single(s.first()), frontier = seen;
        while (!frontier.empty()) {
            ElementSet next;
            frontier.for_each([&](int v) { next |= g.neighbors(v) & s; });
            frontier = next - seen;
            seen |= next;
        }
        if (seen == s) return true;
    }
    return false;
}

// Induced k-sun for some k >= 3, by brute force over vertex subsets.
bool has_induced_sun(const Graph& g) {
    const int n = g.vertex_count();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        const ElementSet s(bits);
        if (s.size() < 6 || s.size() % 2) continue;
        const int k = s.size() / 2;
        ElementSet core, outer;
        s.for_each([&](int v) { ((g.neighbors(v) & s).size() == 2 ? outer : core).insert(v); });
        if (core.size() != k || outer.size() != k || !g.is_clique(core)) continue;
        bool ok = true;
        std::vector<ElementSet> pairs;
        outer.for_each([&](int w) {
            const ElementSet nb = g.neighbors(w) & s;
            ok = ok && nb.subset_of(core) && g.adjacent(nb.first(), nb.without(nb.first()).first());
            pairs.push_back(nb);
        });
        if (!ok) continue;
        // the pairs must form a Hamilton cycle on the core
        std::vector<int> deg(n);
        for (ElementSet p : pairs) p.for_each([&](int v) { ++deg[v]; });
        bool cyc = true;
        core.for_each([&](int v) { cyc = cyc && deg[v] == 2; });
        std::sort(pairs.begin(), pairs.end());
        cyc = cyc && std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
        if (!cyc) continue;
        ElementSet seen = ElementSet::single(core.first());
        for (int round = 0; round < k; ++round)
            for (ElementSet p : pairs)
                if (p.intersects(seen)) seen |= p;
        if (seen == core) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("connected graph counts match the known sequence") {
    const auto gs = connected_graphs(7);
    std::vector<int> count(8);
    for (const auto& g : gs) ++count[g.vertex_count()];
    CHECK(count == std::vector<int>{0, 1, 1, 2, 6, 21, 112, 853});
}

TEST_CASE("canonical codes are invariant under relabelling") {
    std::mt19937_64 rng(5);
    for (const auto& g : connected_graphs(6)) {
        std::vector<int> p(g.vertex_count());
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        Graph h(g.vertex_count());
        for (auto [u, v] : g.edges()) h.add_edge(p[u], p[v]);
        CHECK(canonical_code(h) == canonical_code(g));
    }
}

TEST_CASE("chordality and strong chordality against brute force") {
    for (const auto& g : connected_graphs(7)) {
        const bool chordal = is_chordal(g).chordal();
        CHECK(chordal == !has_chordless_cycle(g));
        if (!chordal) {
            CHECK_FALSE(is_strongly_chordal(g).has_value());
            continue;
        }
        const bool sun = has_induced_sun(g);
        CHECK(is_strongly_chordal(g).has_value() == !sun);
        CHECK(find_induced_trampoline(g).has_value() == sun);
        CHECK(mat_labeling(g).has_value() == !sun);
    }
}

TEST_CASE("perfect elimination orders are verified") {
    const Graph g = trampoline(4);
    const auto r = is_chordal(g);
    REQUIRE(r.chordal());
    CHECK(is_perfect_elimination_order(g, *r.perfect_elimination_order));
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const auto bad = is_chordal(c4);
    CHECK_FALSE(bad.chordal());
    CHECK(bad.chordless_cycle.size() == 4);
}

TEST_CASE("trampolines") {
    CHECK(trampoline(3).edge_count() == 9);
    CHECK(trampoline(4).vertex_count() == 8);
    CHECK(trampoline(4).edge_count() == 14);
    CHECK(broken_trampoline(3).vertex_count() == 5);
    CHECK(broken_trampoline(3).edge_count() == 7);
    CHECK_THROWS_AS(trampoline(2), BadArgument);
    for (int n = 3; n <= 5; ++n) {
        CHECK_FALSE(is_strongly_chordal(trampoline(n)).has_value());
        const auto w = find_induced_trampoline(trampoline(n));
        REQUIRE(w.has_value());
        CHECK(w->n == n);
        CHECK(is_strongly_chordal(broken_trampoline(n)).has_value());
    }
}

TEST_CASE("MAT-labelings and strong edge elimination orders on random graphs") {
    for (int k = 0; k < 60; ++k) {
        const Graph g = random_strongly_chordal(5 + k % 8, 1000 + k);
        const auto labels = mat_labeling(g);
        REQUIRE(labels.has_value());
        CHECK(verify_mat_labeling(g, *labels));
        CHECK(clique_label_violation(g, *labels).empty());
        const auto order = strong_edge_elimination_order(g);
        REQUIRE(order.has_value());
        CHECK(verify_seeo(g, *order));
        if (g.edge_count() <= 12) CHECK(verify_seeo(g, *order, true));
    }
}

TEST_CASE("orders satisfying the edge elimination property force strong chordality") {
    std::mt19937_64 rng(3);
    const auto corpus = random_graph_corpus({200, 5, 7, 14, 99});
    for (const auto& g : corpus) {
        if (!is_chordal(g).chordal()) continue;
        EdgeOrder order(g.edge_count());
        std::iota(order.begin(), order.end(), 0);
        for (int t = 0; t < 20; ++t) {
            std::shuffle(order.begin(), order.end(), rng);
            if (verify_seeo(g, order)) CHECK(is_strongly_chordal(g).has_value());
        }
    }
}

TEST_CASE("broken 4-trampoline labeling puts the hub clique first") {
    const Graph g = broken_trampoline(4);
    const auto labels = mat_labeling(g);
    REQUIRE(labels.has_value());
    const auto order = edge_order_from_labels(*labels);
    // the six clique edges carry labels 3, 2, 2, 1, 1, 1 and lead the order
    std::vector<int> top;
    for (int i = 0; i < 3; ++i) top.push_back((*labels)[order[i]]);
    CHECK(top == std::vector<int>{3, 2, 2});
    for (int i = 0; i < 3; ++i) {
        auto [u, v] = g.edge(order[i]);
        CHECK(u < 4);
        CHECK(v < 4);
    }
}

TEST_CASE("mat labeling violations are reported") {
    const Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(verify_mat_labeling(k3, {1, 1, 2}));
    CHECK_FALSE(verify_mat_labeling(k3, {1, 1, 1}));
    CHECK_THROWS_AS(verify_mat_labeling(k3, {1, 1}), BadArgument);
}

TEST_CASE("maximal cliques") {
    const auto cl = maximal_cliques(broken_trampoline(3));
    CHECK(cl.size() == 3);
    CHECK(maximal_cliques(trampoline(4)).size() == 5);
}

TEST_CASE("graph JSON round trip and errors") {
    const Graph g = example_2_1_graph();
    const Graph back = parse_graph_json(graph_to_json(g));
    CHECK(back.edges() == g.edges());
    CHECK_THROWS_AS(parse_graph_json(R"({"vertices": 2, "edges": [[0, 0]]})"), ParseError);
    CHECK_THROWS_AS(parse_graph_json(R"({"vertices": 2, "edges": [[0, 2]]})"), ParseError);
    CHECK(std::holds_alternative<Graph>(parse_input_json(graph_to_json(g))));
    CHECK(std::holds_alternative<Matroid>(parse_input_json(R"({"ground": 2, "circuits": []})")));
    CHECK_THROWS_AS(parse_input_json("[]"), ParseError);
}
