"""Finite cliques, the specificity order, and generator antichains.

Cliques are plain ``frozenset[str]`` values; a family of generators is kept as
an antichain of inclusion-minimal cliques, which generates the same downclosed
observation as the full family.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Optional

from .graph import CoherenceGraph

Clique = frozenset[str]
CliqueFamily = frozenset[Clique]


def is_clique(g: CoherenceGraph, atoms: Iterable[str]) -> bool:
    """True iff the atoms are pairwise coherent in `g` (the empty set qualifies)."""
    members = sorted(set(atoms))
    for a in members:
        g.require_atom(a)
    return all(g.coherent(a, b) for a, b in combinations(members, 2))


def more_specific(alpha: Clique, beta: Clique) -> bool:
    """True iff `alpha` refines `beta`, i.e. beta is a subset of alpha."""
    return beta <= alpha


def find_incompatibility(g: CoherenceGraph, alpha: Clique, a: str) -> Optional[str]:
    """Some member of `alpha` incoherent with `a`, or None if `a` may join.

    Mirrors the incompatibility-function encoding of cliques: a None result
    guarantees that ``alpha | {a}`` is again a clique.
    """
    g.require_atom(a)
    for b in sorted(alpha):
        if not g.coherent(a, b):
            return b
    return None


def minimal_generators(cliques: Iterable[Clique]) -> CliqueFamily:
    """Antichain of inclusion-minimal members; same downclosure as the input."""
    family = {frozenset(c) for c in cliques}
    return frozenset(c for c in family if not any(d < c for d in family))


def generator_leq(xs: Iterable[Clique], ys: Iterable[Clique]) -> bool:
    """True iff every generator in `xs` refines one in `ys` (xs-down within ys-down)."""
    witnesses = list(ys)
    return all(any(beta <= alpha for beta in witnesses) for alpha in xs)


def format_clique(clique: Clique) -> str:
    return "{" + ", ".join(sorted(clique)) + "}"


def format_family(family: Iterable[Clique]) -> str:
    return "{" + ", ".join(format_clique(c) for c in sorted(family, key=sorted)) + "}"
