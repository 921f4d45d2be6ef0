"""Complete decision procedure over an infinite identity-coherence universe.

Over an anticlique every clique is empty or a singleton, so every term value
is the full observation, a finite set of singletons, or a cofinite one.  Terms
normalize to these three representative shapes in one traversal, and
containment is a small table over finite atom sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from . import terms as tm
from .graph import AnticliqueGraph


@dataclass(frozen=True)
class AnticliqueRepr:
    """Normal form of a term value: TOP, FIN{...}, or COFIN{...}."""

    kind: str  # "top" | "fin" | "cofin"
    atoms: frozenset[str] = frozenset()

    def __str__(self) -> str:
        if self.kind == "top":
            return "TOP"
        label = "FIN" if self.kind == "fin" else "COFIN"
        return label + "{" + ",".join(sorted(self.atoms)) + "}"


TOP_REPR = AnticliqueRepr("top")


def fin(atoms: Iterable[str] = ()) -> AnticliqueRepr:
    return AnticliqueRepr("fin", frozenset(atoms))


def cofin(atoms: Iterable[str] = ()) -> AnticliqueRepr:
    return AnticliqueRepr("cofin", frozenset(atoms))


BOT_REPR = fin()


def repr_or(r1: AnticliqueRepr, r2: AnticliqueRepr) -> AnticliqueRepr:
    if r1.kind == "top" or r2.kind == "top":
        return TOP_REPR
    a, b = r1.atoms, r2.atoms
    if r1.kind == "fin" and r2.kind == "fin":
        return fin(a | b)
    if r1.kind == "cofin" and r2.kind == "cofin":
        return cofin(a & b)
    if r1.kind == "fin":
        return cofin(b - a)
    return cofin(a - b)


def repr_and(r1: AnticliqueRepr, r2: AnticliqueRepr) -> AnticliqueRepr:
    if r1.kind == "top":
        return r2
    if r2.kind == "top":
        return r1
    a, b = r1.atoms, r2.atoms
    if r1.kind == "fin" and r2.kind == "fin":
        return fin(a & b)
    if r1.kind == "cofin" and r2.kind == "cofin":
        return cofin(a | b)
    if r1.kind == "fin":
        return fin(a - b)
    return fin(b - a)


def repr_impl(r1: AnticliqueRepr, r2: AnticliqueRepr) -> AnticliqueRepr:
    """Implication on representatives; yields TOP exactly when r1 is below r2.

    The finite -> finite case produces a cofinite result: the singletons that
    avoid the uncovered source atoms all satisfy the implication, not just the
    covered ones.
    """
    if r2.kind == "top":
        return TOP_REPR
    if r1.kind == "top":
        return r2
    a, b = r1.atoms, r2.atoms
    if r1.kind == "fin" and r2.kind == "fin":
        return TOP_REPR if a <= b else cofin(a - b)
    if r1.kind == "fin":
        return TOP_REPR if not (a & b) else cofin(a & b)
    if r2.kind == "cofin":
        return TOP_REPR if b <= a else cofin(b - a)
    return fin(a | b)


def to_representative(g: AnticliqueGraph, t: tm.Term) -> AnticliqueRepr:
    """Normalize a term over the universe of `g` to its representative."""
    if isinstance(t, tm.Atom):
        g.require_atom(t.name)
        return fin({t.name})
    if isinstance(t, tm.Top):
        return TOP_REPR
    if isinstance(t, tm.Bot):
        return BOT_REPR
    if isinstance(t, tm.Or):
        return repr_or(to_representative(g, t.left), to_representative(g, t.right))
    if isinstance(t, tm.And):
        return repr_and(to_representative(g, t.left), to_representative(g, t.right))
    return repr_impl(to_representative(g, t.left), to_representative(g, t.right))


def to_term(
    g: AnticliqueGraph, r: AnticliqueRepr, hint: Optional[str] = None
) -> tm.Term:
    """A term denoting `r`.

    COFIN{} (all non-empty cliques) needs some atom to mention; the choice is
    immaterial, so it defaults to the universe's index-0 atom unless `hint`
    names another.
    """
    if r.kind == "top":
        return tm.TOP
    if r.kind == "fin":
        return tm.big_or(tm.Atom(a) for a in r.atoms)
    if r.atoms:
        return tm.Impl(tm.big_or(tm.Atom(a) for a in r.atoms), tm.BOT)
    anchor = hint if hint is not None else g.atom(0)
    g.require_atom(anchor)
    return tm.Or(tm.Atom(anchor), tm.Impl(tm.Atom(anchor), tm.BOT))


def repr_leq(r1: AnticliqueRepr, r2: AnticliqueRepr) -> bool:
    """Containment of denoted observations; a cofinite set never fits a finite one."""
    if r2.kind == "top":
        return True
    if r1.kind == "top":
        return False
    a, b = r1.atoms, r2.atoms
    if r1.kind == "fin":
        return a <= b if r2.kind == "fin" else not (a & b)
    if r2.kind == "cofin":
        return b <= a
    return False


def ac_leq(g: AnticliqueGraph, s: tm.Term, t: tm.Term) -> bool:
    """Semantic containment for terms over an anticlique universe."""
    return repr_leq(to_representative(g, s), to_representative(g, t))
