"""Bracket normal forms and the containment decider for lattice terms.

The bracket of a term is its syntactic DNF skeleton: a finite set of finite
atom sets.  Containment of term semantics reduces to a pairwise-containment
check between the clique-filtered bracket of the left term and the raw bracket
of the right term, over any graph with decidable coherence.
"""

from __future__ import annotations

from typing import Iterable

from . import terms as tm
from .cliques import Clique, CliqueFamily, is_clique, minimal_generators
from .errors import BudgetExceededError, UnsupportedOperationError
from .graph import CoherenceGraph

Bracket = frozenset[frozenset[str]]

DEFAULT_MAX_BRACKET = 10**6


def bracket(t: tm.Term, max_members: int = DEFAULT_MAX_BRACKET) -> Bracket:
    """The DNF skeleton of an implication-free term, deduplicated."""
    if isinstance(t, tm.Atom):
        return frozenset({frozenset({t.name})})
    if isinstance(t, tm.Top):
        return frozenset({frozenset()})
    if isinstance(t, tm.Bot):
        return frozenset()
    if isinstance(t, tm.Or):
        result = bracket(t.left, max_members) | bracket(t.right, max_members)
        _check_budget(len(result), max_members)
        return result
    if isinstance(t, tm.And):
        left = bracket(t.left, max_members)
        right = bracket(t.right, max_members)
        _check_budget(len(left) * len(right), max_members)
        return frozenset(x | y for x in left for y in right)
    raise UnsupportedOperationError(
        "implication is not a lattice connective; eliminate it first"
    )


def _check_budget(size: int, max_members: int) -> None:
    if size > max_members:
        raise BudgetExceededError(
            f"bracket would have {size} members; budget is {max_members}"
        )


def triangle_leq(xs: Iterable[frozenset[str]], ys: Iterable[frozenset[str]]) -> bool:
    """Pairwise containment: every member of `xs` contains some member of `ys`."""
    witnesses = list(ys)
    return all(any(y <= x for y in witnesses) for x in xs)


def clique_members(g: CoherenceGraph, xs: Bracket) -> frozenset[Clique]:
    """The members of a bracket that are cliques of `g`, unminimized."""
    return frozenset(x for x in xs if is_clique(g, x))


def filter_cliques(g: CoherenceGraph, xs: Bracket) -> CliqueFamily:
    """Drop non-clique members (they denote bottom), then minimize generators."""
    return minimal_generators(clique_members(g, xs))


def _require_known_atoms(g: CoherenceGraph, *ts: tm.Term) -> None:
    for t in ts:
        for a in sorted(tm.atoms_of(t)):
            g.require_atom(a)


def lat_leq(
    g: CoherenceGraph,
    s: tm.Term,
    t: tm.Term,
    max_bracket: int = DEFAULT_MAX_BRACKET,
) -> bool:
    """Semantic containment of lattice terms, decided purely syntactically."""
    _require_known_atoms(g, s, t)
    return triangle_leq(
        filter_cliques(g, bracket(s, max_bracket)), bracket(t, max_bracket)
    )


def dnf(
    g: CoherenceGraph,
    s: tm.Term,
    max_bracket: int = DEFAULT_MAX_BRACKET,
) -> tm.Term:
    """Canonical disjunctive normal form: the join of meets of clique generators."""
    _require_known_atoms(g, s)
    family = filter_cliques(g, bracket(s, max_bracket))
    return tm.big_or(
        tm.big_and(tm.Atom(a) for a in alpha) for alpha in family
    )
