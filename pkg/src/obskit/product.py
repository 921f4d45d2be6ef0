"""Term vectors and the reduction of product containment to component queries.

A term over a product graph normalizes to a finite set of term vectors, read
either as a join of coordinatewise meets (disjunctive) or as a meet of
coordinatewise joins (conjunctive).  Containment of a disjunctive set in a
conjunctive one reduces, pair by pair, to a single component-level containment
at some shared or padded coordinate, which the per-component engines decide.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Optional

from . import terms as tm
from .anticlique import ac_leq
from .errors import BudgetExceededError, UnknownAtomError, UnsupportedOperationError
from .fan import fan_leq
from .graph import CoherenceGraph, ProductGraph, join_atom, split_atom
from .lattice import DEFAULT_MAX_BRACKET

DEFAULT_MAX_VECTORS = 10**5


@dataclass(frozen=True)
class TermVector:
    """Finitely supported assignment of component terms, keyed by index."""

    coords: tuple[tuple[str, tm.Term], ...]

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(i for i, _ in self.coords)

    def get(self, index: str, default: Optional[tm.Term] = None) -> Optional[tm.Term]:
        for i, t in self.coords:
            if i == index:
                return t
        return default

    def __str__(self) -> str:
        return "[" + "; ".join(f"{i}: {tm.print_term(t)}" for i, t in self.coords) + "]"


def vector(mapping: Mapping[str, tm.Term]) -> TermVector:
    return TermVector(tuple(sorted(mapping.items())))


ZERO_VECTOR = vector({})

Representative = frozenset[TermVector]


def _unit(index: str, t: tm.Term) -> TermVector:
    return TermVector(((index, t),))


def _merge(u: TermVector, v: TermVector, combine, left_only, right_only) -> TermVector:
    coords: Dict[str, tm.Term] = {}
    vu, vv = dict(u.coords), dict(v.coords)
    for i in set(vu) | set(vv):
        if i in vu and i in vv:
            coords[i] = combine(vu[i], vv[i])
        elif i in vu:
            coords[i] = left_only(vu[i])
        else:
            coords[i] = right_only(vv[i])
    return vector(coords)


def vec_or(u: TermVector, v: TermVector) -> TermVector:
    return _merge(u, v, tm.Or, lambda t: t, lambda t: t)


def vec_and(u: TermVector, v: TermVector) -> TermVector:
    return _merge(u, v, tm.And, lambda t: t, lambda t: t)


def vec_impl(u: TermVector, v: TermVector) -> TermVector:
    """Coordinatewise implication; a missing target coordinate negates the source."""
    return _merge(u, v, tm.Impl, lambda t: tm.Impl(t, tm.BOT), lambda t: t)


def inject(index: str, t: tm.Term) -> tm.Term:
    """Rename every atom `a` of a component term to the product atom `a@index`."""
    if isinstance(t, tm.Atom):
        if "@" in t.name:
            raise UnknownAtomError(
                f"atom {t.name!r} already names a product component"
            )
        return tm.Atom(join_atom(t.name, index))
    if isinstance(t, tm.And):
        return tm.And(inject(index, t.left), inject(index, t.right))
    if isinstance(t, tm.Or):
        return tm.Or(inject(index, t.left), inject(index, t.right))
    if isinstance(t, tm.Impl):
        return tm.Impl(inject(index, t.left), inject(index, t.right))
    return t


def prod_term(v: TermVector) -> tm.Term:
    """Meet of the injected coordinates in index order; empty support gives top."""
    parts = [inject(i, t) for i, t in v.coords]
    if not parts:
        return tm.TOP
    acc = parts[0]
    for p in parts[1:]:
        acc = tm.And(acc, p)
    return acc


def coprod_term(v: TermVector) -> tm.Term:
    """Join of the injected coordinates in index order; empty support gives bot."""
    parts = [inject(i, t) for i, t in v.coords]
    if not parts:
        return tm.BOT
    acc = parts[0]
    for p in parts[1:]:
        acc = tm.Or(acc, p)
    return acc


def _expand(vectors: Iterable[TermVector], merge, max_vectors: int) -> Representative:
    """Shared recursion of the two reading conversions.

    Peels vectors in printed order; each step picks one coordinate of the
    peeled vector and merges its unit vector into every result of the rest,
    deduplicating as it goes.  A vector with empty support annihilates the
    whole result.
    """
    ordered = sorted(vectors, key=str)
    acc: frozenset[TermVector] = frozenset({ZERO_VECTOR})
    for v in reversed(ordered):
        if len(v.coords) * len(acc) > max_vectors:
            raise BudgetExceededError(
                f"representative would exceed {max_vectors} vectors"
            )
        acc = frozenset(merge(_unit(i, t), u) for i, t in v.coords for u in acc)
    return acc


def conj_to_disj(
    vectors: Iterable[TermVector], max_vectors: int = DEFAULT_MAX_VECTORS
) -> Representative:
    """Turn a meet of coordinate-joins into a join of coordinate-meets."""
    return _expand(vectors, vec_and, max_vectors)


def disj_to_conj(
    vectors: Iterable[TermVector], max_vectors: int = DEFAULT_MAX_VECTORS
) -> Representative:
    """Turn a join of coordinate-meets into a meet of coordinate-joins."""
    return _expand(vectors, vec_or, max_vectors)


class ComponentEngine:
    """Containment decider for one product component, with a result cache."""

    def __init__(self, graph: CoherenceGraph, max_bracket: int = DEFAULT_MAX_BRACKET):
        if graph.kind == "anticlique":
            self.kind = "anticlique"
        elif graph.has_fan:
            self.kind = "fan"
        else:
            raise UnsupportedOperationError(
                f"no complete engine for a {graph.kind} component without "
                "finite anti-neighbourhoods"
            )
        self.graph = graph
        self.max_bracket = max_bracket
        self._cache: Dict[tuple[tm.Term, tm.Term], bool] = {}

    def leq(self, s: tm.Term, t: tm.Term) -> bool:
        key = (s, t)
        if key not in self._cache:
            if self.kind == "fan":
                self._cache[key] = fan_leq(self.graph, s, t, self.max_bracket)
            else:
                self._cache[key] = ac_leq(self.graph, s, t)
        return self._cache[key]


def engines_for(
    p: ProductGraph, max_bracket: int = DEFAULT_MAX_BRACKET
) -> Dict[str, ComponentEngine]:
    return {i: ComponentEngine(g, max_bracket) for i, g in p.components}


def _drop_absorbed(rep: Representative, absorbs) -> Representative:
    """Remove vectors made redundant by another member of the same reading.

    `absorbs(w, v)` must be a sound test that `v` contributes nothing in the
    presence of `w`; mutually absorbing vectors keep their first printed
    representative.
    """
    ordered = sorted(rep, key=str)
    kept = []
    for i, v in enumerate(ordered):
        redundant = any(
            j != i and absorbs(w, v) and (j < i or not absorbs(v, w))
            for j, w in enumerate(ordered)
        )
        if not redundant:
            kept.append(v)
    return frozenset(kept)


def _prune_disjunctive(
    engines: Mapping[str, ComponentEngine], rep: Representative
) -> Representative:
    """Canonicalize a join of meet-read vectors.

    Coordinates equal to top are redundant in a meet; a coordinate equal to
    bot kills its whole vector; a vector coordinatewise below another is
    absorbed by the join.  Every test goes through the component engines, so
    pruning never changes the denoted observation.
    """
    out = []
    for v in rep:
        coords: Dict[str, tm.Term] = {}
        dead = False
        for i, t in v.coords:
            engine = engines[i]
            if engine.leq(t, tm.BOT):
                dead = True
                break
            if not engine.leq(tm.TOP, t):
                coords[i] = t
        if not dead:
            out.append(vector(coords))

    def absorbs(w: TermVector, v: TermVector) -> bool:
        return set(w.support) <= set(v.support) and all(
            engines[i].leq(v.get(i), w.get(i)) for i in w.support
        )

    return _drop_absorbed(frozenset(out), absorbs)


def _prune_conjunctive(
    engines: Mapping[str, ComponentEngine], rep: Representative
) -> Representative:
    """Dual canonicalization for a meet of join-read vectors."""
    out = []
    for v in rep:
        coords: Dict[str, tm.Term] = {}
        skip = False
        for i, t in v.coords:
            engine = engines[i]
            if engine.leq(tm.TOP, t):
                skip = True
                break
            if not engine.leq(t, tm.BOT):
                coords[i] = t
        if not skip:
            out.append(vector(coords))

    def absorbs(w: TermVector, v: TermVector) -> bool:
        return set(w.support) <= set(v.support) and all(
            engines[i].leq(w.get(i), v.get(i)) for i in w.support
        )

    return _drop_absorbed(frozenset(out), absorbs)


def disjunctive_rep(
    p: ProductGraph,
    t: tm.Term,
    engines: Optional[Mapping[str, ComponentEngine]] = None,
    max_vectors: int = DEFAULT_MAX_VECTORS,
) -> Representative:
    """Normalize a product term to a join of meet-read vectors.

    With `engines` given, vectors are pruned of provably-trivial coordinates
    after every expansion, which is what keeps nested implications tractable.
    """

    def disj(term: tm.Term) -> Representative:
        rep = _tau(term)
        if engines is not None:
            rep = _prune_disjunctive(engines, rep)
        return rep

    def conj(term: tm.Term) -> Representative:
        rep = disj_to_conj(disj(term), max_vectors)
        if engines is not None:
            rep = _prune_conjunctive(engines, rep)
        return rep

    def _tau(term: tm.Term) -> Representative:
        if isinstance(term, tm.Atom):
            p.require_atom(term.name)
            name, index = split_atom(term.name)
            return frozenset({_unit(index, tm.Atom(name))})
        if isinstance(term, tm.Top):
            return frozenset({ZERO_VECTOR})
        if isinstance(term, tm.Bot):
            return frozenset()
        if isinstance(term, tm.Or):
            result = disj(term.left) | disj(term.right)
            if len(result) > max_vectors:
                raise BudgetExceededError(
                    f"representative would exceed {max_vectors} vectors"
                )
            return result
        if isinstance(term, tm.And):
            return conj_to_disj(conj(term.left) | conj(term.right), max_vectors)
        source = disj(term.left)
        target = conj(term.right)
        if len(source) * len(target) > max_vectors:
            raise BudgetExceededError(
                f"representative would exceed {max_vectors} vectors"
            )
        pairs = frozenset(vec_impl(u, v) for u in source for v in target)
        if engines is not None:
            pairs = _prune_conjunctive(engines, pairs)
        return conj_to_disj(pairs, max_vectors)

    return disj(t)


def conjunctive_rep(
    p: ProductGraph,
    t: tm.Term,
    engines: Optional[Mapping[str, ComponentEngine]] = None,
    max_vectors: int = DEFAULT_MAX_VECTORS,
) -> Representative:
    """Normalize a product term to a meet of join-read vectors."""
    rep = disj_to_conj(disjunctive_rep(p, t, engines, max_vectors), max_vectors)
    if engines is not None:
        rep = _prune_conjunctive(engines, rep)
    return rep


def format_representative(rep: Representative) -> str:
    return "{" + ", ".join(sorted(str(v) for v in rep)) + "}"


def prod_leq(
    p: ProductGraph,
    engines: Mapping[str, ComponentEngine],
    s: tm.Term,
    t: tm.Term,
    max_vectors: int = DEFAULT_MAX_VECTORS,
) -> bool:
    """Semantic containment over a product, via component containment queries.

    Each (meet-vector, join-vector) pair must admit some index, over the union
    of the two supports, at which the source coordinate (padded with top) is
    below the target coordinate (padded with bot) in that component.
    """
    if p.kind != "product":
        raise UnsupportedOperationError("this engine needs a product graph")
    for index in p.indices:
        if index not in engines:
            raise UnsupportedOperationError(
                f"missing component engine for index {index!r}"
            )
    for term in (s, t):
        for atom in sorted(tm.atoms_of(term)):
            p.require_atom(atom)
    source = disjunctive_rep(p, s, engines, max_vectors)
    target = conjunctive_rep(p, t, engines, max_vectors)
    for u in source:
        for v in target:
            indices = sorted(set(u.support) | set(v.support))
            if not any(
                engines[i].leq(u.get(i, tm.TOP), v.get(i, tm.BOT)) for i in indices
            ):
                return False
    return True
