"""Brute-force reference semantics over graphs with finitely many atoms.

This module owns the only materialized semantics in the package: it enumerates
every clique of a small graph and evaluates terms extensionally.  The engines
never enumerate cliques, which is what makes differential testing against this
module meaningful.  It is written to be obviously correct, not fast.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable

from . import terms as tm
from .cliques import Clique, format_family, is_clique
from .errors import BudgetExceededError, UnsupportedOperationError
from .graph import CoherenceGraph, FiniteGraph, finite_graph

SemSet = frozenset[Clique]

DEFAULT_MAX_ATOMS = 16


@lru_cache(maxsize=4096)
def enum_cliques(g: CoherenceGraph, max_atoms: int = DEFAULT_MAX_ATOMS) -> SemSet:
    """All pairwise-coherent subsets of the graph's atoms, including the empty set."""
    atoms = g.finite_atoms()
    if atoms is None:
        raise UnsupportedOperationError(
            "clique enumeration needs a graph with finitely many atoms"
        )
    if len(atoms) > max_atoms:
        raise BudgetExceededError(
            f"graph has {len(atoms)} atoms; enumeration is capped at {max_atoms}"
        )
    out = []
    for size in range(len(atoms) + 1):
        for subset in combinations(atoms, size):
            if all(g.coherent(a, b) for a, b in combinations(subset, 2)):
                out.append(frozenset(subset))
    return frozenset(out)


def down_close(g: CoherenceGraph, generators: Iterable[Clique]) -> SemSet:
    """Every clique of `g` that contains some generator."""
    universe = enum_cliques(g)
    gens = [frozenset(x) for x in generators]
    for gen in gens:
        if not is_clique(g, gen):
            raise UnsupportedOperationError(
                f"generator {sorted(gen)} is not a clique of this graph"
            )
    return frozenset(alpha for alpha in universe if any(beta <= alpha for beta in gens))


def is_downclosed(g: CoherenceGraph, xs: SemSet) -> bool:
    universe = enum_cliques(g)
    return all(
        alpha in xs
        for beta in xs
        for alpha in universe
        if beta <= alpha
    )


def eval_term(g: CoherenceGraph, t: tm.Term, max_atoms: int = DEFAULT_MAX_ATOMS) -> SemSet:
    """Extensional semantics of `t`: the set of cliques satisfying it."""
    universe = enum_cliques(g, max_atoms)
    return _eval(g, t, universe)


def _eval(g: CoherenceGraph, t: tm.Term, universe: SemSet) -> SemSet:
    if isinstance(t, tm.Atom):
        g.require_atom(t.name)
        return frozenset(alpha for alpha in universe if t.name in alpha)
    if isinstance(t, tm.Top):
        return universe
    if isinstance(t, tm.Bot):
        return frozenset()
    if isinstance(t, tm.And):
        return _eval(g, t.left, universe) & _eval(g, t.right, universe)
    if isinstance(t, tm.Or):
        return _eval(g, t.left, universe) | _eval(g, t.right, universe)
    source = _eval(g, t.left, universe)
    target = _eval(g, t.right, universe)
    result = frozenset(
        alpha
        for alpha in universe
        if all((alpha | beta) not in universe or (alpha | beta) in target for beta in source)
    )
    # Residuals land back inside the algebra: every implication value is downclosed.
    assert all(
        gamma in result for alpha in result for gamma in universe if alpha <= gamma
    )
    return result


def oracle_leq(g: CoherenceGraph, s: tm.Term, t: tm.Term) -> bool:
    """Containment of extensional semantics; ground truth for every engine."""
    return eval_term(g, s) <= eval_term(g, t)


def anticlique_model(atom_names: Iterable[str]) -> FiniteGraph:
    """Finite identity-coherence graph on the given atoms plus two fresh ones.

    Two extra atoms are enough to make every containment between finite and
    cofinite singleton-families come out as it would over an infinite
    anticlique universe: the fresh atoms witness that no cofinite family fits
    inside a finite one, while tests among the named atoms are unaffected.
    """
    base = sorted(set(atom_names))
    fresh: list[str] = []
    counter = 0
    while len(fresh) < 2:
        candidate = f"f{counter}"
        counter += 1
        if candidate not in base:
            fresh.append(candidate)
    return finite_graph(base + fresh, [])


def ac_oracle_leq(s: tm.Term, t: tm.Term) -> bool:
    """Reference containment for terms over an anticlique universe."""
    g = anticlique_model(tm.atoms_of(s) | tm.atoms_of(t))
    return oracle_leq(g, s, t)


def format_semset(xs: SemSet) -> str:
    return format_family(xs)
