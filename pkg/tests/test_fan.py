from __future__ import annotations

import random

import pytest
from hypothesis import given

from conftest import graph_and_terms
from obskit import (
    And,
    Atom,
    BOT,
    Impl,
    Or,
    TOP,
    UnsupportedOperationError,
    big_and,
    clique_negation,
    eval_term,
    fan_leq,
    implication_to_lattice,
    is_lattice_term,
    oracle_leq,
    parse_term,
    print_term,
    to_lattice_term,
)
from helpers import (
    all_graphs_on,
    enum_terms,
    random_clique,
    random_finite_graph,
    random_term,
)


def fz(*atoms):
    return frozenset(atoms)


def fan_equiv(g, s, t):
    return fan_leq(g, s, t) and fan_leq(g, t, s)


def test_clique_negation_examples(g3):
    assert clique_negation(g3, fz("a")) == Atom("c")
    assert clique_negation(g3, fz("b")) == BOT
    assert clique_negation(g3, fz()) == BOT


def test_clique_negation_requires_fan(omega):
    with pytest.raises(UnsupportedOperationError):
        clique_negation(omega, fz("n1"))


def test_clique_negation_denotes_pseudocomplement():
    rng = random.Random(51)
    for _ in range(100):
        names = [f"v{k}" for k in range(rng.randint(1, 5))]
        g = random_finite_graph(rng, names, rng.random())
        alpha = random_clique(rng, g)
        negation = clique_negation(g, alpha)
        meet = big_and(Atom(a) for a in alpha)
        assert eval_term(g, negation) == eval_term(g, Impl(meet, BOT))


def test_implication_to_lattice_examples(g3):
    assert implication_to_lattice(g3, Atom("a"), BOT) == Atom("c")
    assert implication_to_lattice(g3, BOT, parse_term("a & b")) == TOP
    two = all_graphs_on(["x", "y"])
    edgeless = next(g for g in two if not g.coherent("x", "y"))
    assert implication_to_lattice(edgeless, Atom("x"), BOT) == Atom("y")


def test_lowering_examples(g3):
    assert to_lattice_term(g3, parse_term("a & b")) == parse_term("a & b")
    double_neg = parse_term("(a -> bot) -> bot")
    lowered = to_lattice_term(g3, double_neg)
    assert is_lattice_term(lowered)
    assert eval_term(g3, lowered) == frozenset([fz("a"), fz("a", "b")])
    vacuous = to_lattice_term(g3, parse_term("top -> a"))
    assert eval_term(g3, vacuous) == eval_term(g3, Atom("a"))


@given(graph_and_terms(max_atoms=5, n_terms=1, max_leaves=10))
def test_lowering_preserves_semantics(case):
    g, (s,) = case
    lowered = to_lattice_term(g, s)
    assert is_lattice_term(lowered)
    assert eval_term(g, lowered) == eval_term(g, s)


@given(graph_and_terms(max_atoms=4, n_terms=2, max_leaves=8))
def test_fan_leq_matches_oracle_property(case):
    g, (s, t) = case
    assert fan_leq(g, s, t) == oracle_leq(g, s, t)


def test_fan_leq_examples(g3):
    assert fan_leq(g3, parse_term("a -> bot"), Atom("c"))
    assert not fan_leq(g3, TOP, parse_term("a | (a -> bot)"))
    s = parse_term("(a -> b) -> c")
    assert fan_leq(g3, s, s)


def test_fan_leq_requires_fan(omega):
    with pytest.raises(UnsupportedOperationError):
        fan_leq(omega, Atom("n1"), Atom("n1"))


def test_fan_leq_matches_oracle_exhaustively_on_two_atom_graphs():
    terms = enum_terms(["x", "y"], 2, with_impl=True)
    for g in all_graphs_on(["x", "y"]):
        sems = {t: eval_term(g, t) for t in terms}
        lowered = {t: to_lattice_term(g, t) for t in terms}
        for s in terms:
            for t in terms:
                got = fan_leq(g, lowered[s], lowered[t])
                assert got == (sems[s] <= sems[t]), (
                    f"disagreement on {print_term(s)} vs {print_term(t)}"
                )


def test_fan_leq_matches_oracle_on_random_instances():
    rng = random.Random(53)
    for _ in range(200):
        names = [f"v{k}" for k in range(rng.randint(1, 4))]
        g = random_finite_graph(rng, names, rng.random())
        s = random_term(rng, names, rng.randint(1, 8))
        t = random_term(rng, names, rng.randint(1, 8))
        assert fan_leq(g, s, t) == oracle_leq(g, s, t)


def test_fan_leq_matches_oracle_on_fan_products(bb):
    rng = random.Random(54)
    atoms = list(bb.finite_atoms())
    for _ in range(60):
        s = random_term(rng, atoms, rng.randint(1, 6))
        t = random_term(rng, atoms, rng.randint(1, 6))
        assert fan_leq(bb, s, t) == oracle_leq(bb, s, t)


def test_adjunction_at_engine_level():
    rng = random.Random(55)
    for _ in range(150):
        names = [f"v{k}" for k in range(rng.randint(1, 4))]
        g = random_finite_graph(rng, names, rng.random())
        s = random_term(rng, names, rng.randint(1, 5))
        t = random_term(rng, names, rng.randint(1, 5))
        u = random_term(rng, names, rng.randint(1, 5))
        assert fan_leq(g, And(s, u), t) == fan_leq(g, u, Impl(s, t))


def test_heyting_axioms_hold_under_fan_equivalence():
    rng = random.Random(56)
    for _ in range(100):
        names = [f"v{k}" for k in range(rng.randint(1, 4))]
        g = random_finite_graph(rng, names, rng.random())
        s = random_term(rng, names, rng.randint(1, 4))
        t = random_term(rng, names, rng.randint(1, 4))
        u = random_term(rng, names, rng.randint(1, 4))
        assert fan_equiv(g, Impl(s, s), TOP)
        assert fan_equiv(g, And(s, Impl(s, t)), And(s, t))
        assert fan_equiv(g, And(t, Impl(s, t)), t)
        assert fan_equiv(g, Impl(s, And(t, u)), And(Impl(s, t), Impl(s, u)))


def test_clique_implication_axioms():
    # Meets of cliques split over joins on the right, and discharge an atom
    # outside the clique into its negation.
    rng = random.Random(57)
    for _ in range(100):
        names = [f"v{k}" for k in range(rng.randint(1, 5))]
        g = random_finite_graph(rng, names, rng.random())
        alpha = random_clique(rng, g)
        meet = big_and(Atom(x) for x in alpha)
        s = random_term(rng, names, rng.randint(1, 4))
        t = random_term(rng, names, rng.randint(1, 4))
        assert fan_equiv(g, Impl(meet, Or(s, t)), Or(Impl(meet, s), Impl(meet, t)))
        outside = sorted(set(names) - alpha)
        if outside:
            a = Atom(rng.choice(outside))
            assert fan_equiv(g, Impl(meet, a), Or(Impl(meet, BOT), a))
        assert fan_equiv(g, Impl(meet, BOT), clique_negation(g, alpha))


def test_incompleteness_regression(single_vertex, two_incoherent):
    # The same identity flips verdict between a graph and a supergraph:
    # negation of x collapses to bot alone, but denotes the other vertex
    # once one exists.
    neg_x = parse_term("x -> bot")
    assert fan_equiv(single_vertex, neg_x, BOT)
    assert fan_equiv(two_incoherent, neg_x, Atom("y"))
    assert not fan_equiv(two_incoherent, neg_x, BOT)
