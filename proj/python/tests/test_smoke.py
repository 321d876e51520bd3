import itertools
import random

import pytest

import mobius


def test_named_registry():
    names = mobius.named_instance_names()
    assert "fano" in names and "trampoline3" in names
    fano = mobius.named_matroid("fano")
    assert fano.ground_size == 7
    assert fano.whitney_numbers() == [1, 7, 7, 1]
    assert sorted(len(c) for c in fano.circuits).count(3) == 7


def test_example_graph_whitney():
    g = mobius.Graph(4, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 2)])
    assert mobius.cycle_matroid(g).whitney_numbers() == [1, 5, 6, 1]


def test_axiom_violation_raises():
    with pytest.raises(mobius.AxiomViolation):
        mobius.Matroid(4, [[0, 1, 2], [1, 2, 3]])


def test_json_round_trip():
    m = mobius.named_matroid("l23")
    back = mobius.Matroid.from_json(m.to_json())
    assert back.circuits == m.circuits
    g = mobius.trampoline(3)
    assert mobius.Graph.from_json(g.to_json()).edges == g.edges


def test_chordality_against_networkx():
    nx = pytest.importorskip("networkx")
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(3, 8)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.45]
        g = mobius.Graph(n, edges)
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(edges)
        assert (mobius.is_chordal(g) is not None) == nx.is_chordal(h)
        assert mobius.is_quadratic(mobius.cycle_matroid(g)) == nx.is_chordal(h)


def test_trampoline_predicates():
    t3 = mobius.trampoline(3)
    assert mobius.is_chordal(t3) is not None
    assert mobius.is_strongly_chordal(t3) is None
    assert mobius.mat_labeling(t3) is None
    b3 = mobius.broken_trampoline(3)
    labels = mobius.mat_labeling(b3)
    assert labels is not None and mobius.verify_mat_labeling(b3, labels)
    order = mobius.strong_edge_elimination_order(b3)
    assert mobius.verify_seeo(b3, order, True)
    assert mobius.is_strong_elimination_order(mobius.cycle_matroid(b3), order)


def test_golden_predicates():
    assert not mobius.is_quadratic(mobius.named_matroid("l23"))
    assert mobius.is_t_chordal(mobius.named_matroid("whirl3"))
    assert not mobius.is_line_closed(mobius.named_matroid("whirl3"))
    assert mobius.is_quadratic(mobius.named_matroid("betsy-ross"))
    assert not mobius.is_c_chordal(mobius.named_matroid("betsy-ross"))


def test_fano_order_and_search():
    fano = mobius.named_matroid("fano")
    assert mobius.is_strong_elimination_order(fano, list(range(7)))
    assert max(mobius.lex_initial_ideal_degrees(fano, list(range(7)))) == 2
    rep = mobius.search_strong_elimination_order(mobius.named_matroid("l23"))
    assert rep["outcome"] == "ExhaustedNone"


def test_betti_tables():
    t3 = mobius.betti_table(mobius.named_matroid("trampoline3"), steps=4)
    expected = {(0, 0): 1, (1, 1): 9, (2, 2): 53, (3, 3): 260, (4, 4): 1156, (4, 5): 1}
    assert t3 == expected
    assert mobius.betti_table(mobius.named_matroid("u23"), steps=0) == {(0, 0): 1}
    b3 = mobius.betti_table(mobius.named_matroid("broken-trampoline3"), steps=4)
    assert all(i == j for (i, j) in b3)


def test_identities():
    assert mobius.hs_poincare_residual(mobius.named_matroid("broken-trampoline3"), 4) == []
    assert mobius.trampoline_functional_equation_residual(3, 4, 4) == []


def test_acceptance_subset():
    results = mobius.run_acceptance([3, 4, 6, 7])
    assert [r["criterion"] for r in results] == [3, 4, 6, 7]
    assert all(r["passed"] for r in results)
