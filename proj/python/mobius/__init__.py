"""Graded Moebius algebras of matroids: chordality, Groebner bases and Betti tables."""

from ._mobius import (  # noqa: F401
    AxiomViolation,
    BadArgument,
    Graph,
    Matroid,
    MismatchBug,
    NotSimple,
    ParseError,
    SizeLimit,
    betti_table,
    betti_text,
    broken_trampoline,
    cycle_matroid,
    hs_poincare_residual,
    is_c_chordal,
    is_chordal,
    is_line_closed,
    is_quadratic,
    is_strong_elimination_order,
    is_strongly_chordal,
    is_t_chordal,
    lex_initial_ideal_degrees,
    mat_labeling,
    named_graph,
    named_instance_names,
    named_matroid,
    presentation_text,
    run_acceptance,
    search_strong_elimination_order,
    strong_edge_elimination_order,
    trampoline,
    trampoline_functional_equation_residual,
    verify_mat_labeling,
    verify_seeo,
)
