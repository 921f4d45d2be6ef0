"""Shared generators and small independent evaluators used across the tests."""

from __future__ import annotations

import random
from itertools import combinations

from obskit import (
    And,
    Atom,
    BOT,
    Impl,
    Or,
    TOP,
    enum_cliques,
    finite_graph,
)


def enum_terms(atom_names, depth, with_impl=False):
    """All ASTs of the given maximum depth (leaves have depth 1)."""
    leaves = [TOP, BOT] + [Atom(a) for a in atom_names]
    if depth <= 1:
        return list(leaves)
    smaller = enum_terms(atom_names, depth - 1, with_impl)
    ops = [And, Or] + ([Impl] if with_impl else [])
    out = list(smaller)
    for op in ops:
        out.extend(op(l, r) for l in smaller for r in smaller)
    return out


def random_term(rng: random.Random, atom_names, size, with_impl=True):
    """Random AST with roughly `size` leaves, biased toward atoms."""
    if size <= 1:
        roll = rng.random()
        if roll < 0.75 and atom_names:
            return Atom(rng.choice(atom_names))
        return TOP if roll < 0.875 else BOT
    ops = [And, Or, Impl] if with_impl else [And, Or]
    op = rng.choice(ops)
    left_size = rng.randint(1, size - 1)
    return op(
        random_term(rng, atom_names, left_size, with_impl),
        random_term(rng, atom_names, size - left_size, with_impl),
    )


def random_finite_graph(rng: random.Random, atom_names, edge_prob=0.5):
    pairs = [
        (a, b) for a, b in combinations(sorted(atom_names), 2) if rng.random() < edge_prob
    ]
    return finite_graph(atom_names, pairs)


def all_graphs_on(atom_names):
    """Every coherence relation over the given atoms (loops implicit)."""
    slots = list(combinations(sorted(atom_names), 2))
    for mask in range(2 ** len(slots)):
        pairs = [slots[k] for k in range(len(slots)) if mask >> k & 1]
        yield finite_graph(atom_names, pairs)


def random_clique(rng: random.Random, g):
    """Random clique of a finite graph, uniform over the enumerated cliques."""
    return rng.choice(sorted(enum_cliques(g), key=sorted))


def rep_sem(rep, g):
    """Interpret an anticlique representative directly over a finite identity model."""
    if rep.kind == "top":
        return enum_cliques(g)
    members = (
        rep.atoms if rep.kind == "fin" else frozenset(g.finite_atoms()) - rep.atoms
    )
    return frozenset(frozenset({a}) for a in members)


def sem_impl(g, xs, ys):
    """Set-level residual implication, evaluated directly over the cliques of g."""
    universe = enum_cliques(g)
    return frozenset(
        alpha
        for alpha in universe
        if all((alpha | beta) not in universe or (alpha | beta) in ys for beta in xs)
    )


def equivalent_variant(rng: random.Random, t, atom_names):
    """A structurally different term provably equal to `t` by lattice/Heyting laws."""
    rewrites = [
        lambda u: And(u, TOP),
        lambda u: Or(u, BOT),
        lambda u: And(u, Or(u, random_term(rng, atom_names, 2))),
        lambda u: Or(u, And(u, random_term(rng, atom_names, 2))),
        lambda u: And(u, u),
        lambda u: Or(u, u),
    ]
    out = t
    for _ in range(rng.randint(1, 2)):
        out = rng.choice(rewrites)(out)
    return out
