"""Implication elimination over graphs with finite anti-neighbourhoods.

When every atom has finitely many incoherent partners, the negation of a
clique is expressible as the join of those partners, and implications can be
rewritten away entirely.  The construction here follows the defining rewrite
steps clause for clause and canonicalizes each eliminated implication through
`dnf`, which keeps nested implications from stacking up unnormalized terms.
"""

from __future__ import annotations

from . import terms as tm
from .cliques import Clique
from .errors import UnsupportedOperationError
from .graph import CoherenceGraph
from .lattice import DEFAULT_MAX_BRACKET, bracket, clique_members, dnf, lat_leq


def _require_fan(g: CoherenceGraph) -> None:
    if not g.has_fan:
        raise UnsupportedOperationError(
            "this engine needs the finite anti-neighbourhood property"
        )


def clique_negation(g: CoherenceGraph, alpha: Clique) -> tm.Term:
    """Join of all atoms incoherent with some member of `alpha`.

    Semantically equal to the pseudocomplement of the meet of `alpha`; the
    empty clique yields bot.
    """
    _require_fan(g)
    witnesses: set[str] = set()
    for a in alpha:
        witnesses |= g.anti_neighbourhood(a)
    return tm.big_or(tm.Atom(b) for b in witnesses)


def implication_to_lattice(
    g: CoherenceGraph,
    s: tm.Term,
    t: tm.Term,
    max_bracket: int = DEFAULT_MAX_BRACKET,
) -> tm.Term:
    """A lattice term equal to ``s -> t`` for implication-free `s`, `t`.

    Both sides are reduced to their clique generators; the implication is then
    split across the source generators, distributed over the target
    generators, and discharged atom by atom, replacing each residual clique
    negation by its witness join.  An empty target short-circuits to the meet
    of the source negations.
    """
    _require_fan(g)
    source = clique_members(g, bracket(s, max_bracket))
    target = clique_members(g, bracket(t, max_bracket))
    if not target:
        result = tm.big_and(clique_negation(g, alpha) for alpha in source)
    else:
        conjuncts = []
        for alpha in source:
            negation = clique_negation(g, alpha)
            conjuncts.append(
                tm.big_or(
                    tm.big_and(tm.Or(negation, tm.Atom(a)) for a in beta - alpha)
                    for beta in target
                )
            )
        result = tm.big_and(conjuncts)
    return dnf(g, result, max_bracket)


def to_lattice_term(
    g: CoherenceGraph,
    t: tm.Term,
    max_bracket: int = DEFAULT_MAX_BRACKET,
) -> tm.Term:
    """Implication-free term with the same semantics as `t`."""
    _require_fan(g)
    return _lower(g, t, max_bracket)


def _lower(g: CoherenceGraph, t: tm.Term, max_bracket: int) -> tm.Term:
    if isinstance(t, tm.And):
        return tm.And(_lower(g, t.left, max_bracket), _lower(g, t.right, max_bracket))
    if isinstance(t, tm.Or):
        return tm.Or(_lower(g, t.left, max_bracket), _lower(g, t.right, max_bracket))
    if isinstance(t, tm.Impl):
        return implication_to_lattice(
            g,
            _lower(g, t.left, max_bracket),
            _lower(g, t.right, max_bracket),
            max_bracket,
        )
    return t


def fan_leq(
    g: CoherenceGraph,
    s: tm.Term,
    t: tm.Term,
    max_bracket: int = DEFAULT_MAX_BRACKET,
) -> bool:
    """Semantic containment for terms with implication over a FAN graph."""
    return lat_leq(
        g,
        to_lattice_term(g, s, max_bracket),
        to_lattice_term(g, t, max_bracket),
        max_bracket,
    )
