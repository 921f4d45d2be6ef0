"""Coherence graphs: finite explicit, infinite anticlique, and product kinds.

A graph is a set of atoms with a reflexive, symmetric coherence relation.
Graphs are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .errors import GraphFormatError, UnknownAtomError, UnsupportedOperationError

_IDENT_RE = re.compile(r"[A-Za-z0-9_]+\Z")

# `top` and `bot` are term-syntax keywords, so they cannot name atoms.
_RESERVED = frozenset({"top", "bot"})


def split_atom(atom: str) -> tuple[str, Optional[str]]:
    """Split a product atom `a@i` into (name, index); base atoms give (atom, None)."""
    name, sep, index = atom.partition("@")
    return (name, index) if sep else (atom, None)


def join_atom(name: str, index: str) -> str:
    return f"{name}@{index}"


class CoherenceGraph:
    """Common interface: membership, coherence queries, anti-neighbourhoods."""

    kind: str = "abstract"

    def __contains__(self, atom: str) -> bool:
        raise NotImplementedError

    def coherent(self, a: str, b: str) -> bool:
        raise NotImplementedError

    def anti_neighbourhood(self, a: str) -> frozenset[str]:
        """All atoms incoherent with `a`; only defined when `has_fan`."""
        raise NotImplementedError

    @property
    def has_fan(self) -> bool:
        """True when every atom has finitely many incoherent partners."""
        raise NotImplementedError

    def finite_atoms(self) -> Optional[tuple[str, ...]]:
        """Sorted atoms for graphs with finitely many, else None."""
        return None

    def require_atom(self, atom: str) -> None:
        if atom not in self:
            raise UnknownAtomError(f"atom {atom!r} is not in this graph")


@dataclass(frozen=True)
class FiniteGraph(CoherenceGraph):
    """Explicit finite graph; `pairs` holds unordered coherent pairs, loops omitted."""

    atoms: tuple[str, ...]
    pairs: frozenset[frozenset[str]]

    kind = "finite"

    @cached_property
    def _atom_set(self) -> frozenset[str]:
        return frozenset(self.atoms)

    def __contains__(self, atom: str) -> bool:
        return atom in self._atom_set

    def coherent(self, a: str, b: str) -> bool:
        self.require_atom(a)
        self.require_atom(b)
        return a == b or frozenset((a, b)) in self.pairs

    @property
    def has_fan(self) -> bool:
        return True

    def anti_neighbourhood(self, a: str) -> frozenset[str]:
        self.require_atom(a)
        return frozenset(
            b for b in self.atoms if a != b and frozenset((a, b)) not in self.pairs
        )

    def finite_atoms(self) -> tuple[str, ...]:
        return self.atoms


@dataclass(frozen=True)
class AnticliqueGraph(CoherenceGraph):
    """Countable universe `prefix0, prefix1, ...` whose coherence is identity."""

    prefix: str

    kind = "anticlique"

    @cached_property
    def _member_re(self) -> re.Pattern[str]:
        return re.compile(re.escape(self.prefix) + r"[0-9]+\Z")

    def __contains__(self, atom: str) -> bool:
        return bool(self._member_re.match(atom))

    def coherent(self, a: str, b: str) -> bool:
        self.require_atom(a)
        self.require_atom(b)
        return a == b

    @property
    def has_fan(self) -> bool:
        return False

    def anti_neighbourhood(self, a: str) -> frozenset[str]:
        self.require_atom(a)
        raise UnsupportedOperationError(
            "anti-neighbourhoods are infinite over an anticlique universe"
        )

    def atom(self, index: int) -> str:
        return f"{self.prefix}{index}"


@dataclass(frozen=True)
class ProductGraph(CoherenceGraph):
    """Finite product of base graphs; atoms are `a@i` with `i` a component index.

    Atoms from distinct components are always coherent; within a component the
    component's relation applies.
    """

    components: tuple[tuple[str, CoherenceGraph], ...]

    kind = "product"

    @cached_property
    def component_map(self) -> dict[str, CoherenceGraph]:
        return dict(self.components)

    @property
    def indices(self) -> tuple[str, ...]:
        return tuple(i for i, _ in self.components)

    def __contains__(self, atom: str) -> bool:
        name, index = split_atom(atom)
        if index is None:
            return False
        comp = self.component_map.get(index)
        return comp is not None and name in comp

    def coherent(self, a: str, b: str) -> bool:
        self.require_atom(a)
        self.require_atom(b)
        name_a, i = split_atom(a)
        name_b, j = split_atom(b)
        if i != j:
            return True
        return self.component_map[i].coherent(name_a, name_b)

    @property
    def has_fan(self) -> bool:
        return all(g.has_fan for _, g in self.components)

    def anti_neighbourhood(self, a: str) -> frozenset[str]:
        self.require_atom(a)
        name, index = split_atom(a)
        comp = self.component_map[index]
        return frozenset(join_atom(b, index) for b in comp.anti_neighbourhood(name))

    def finite_atoms(self) -> Optional[tuple[str, ...]]:
        out: list[str] = []
        for index, comp in self.components:
            atoms = comp.finite_atoms()
            if atoms is None:
                return None
            out.extend(join_atom(name, index) for name in atoms)
        return tuple(sorted(out))


def _check_ident(value: object, what: str) -> str:
    if not isinstance(value, str) or not _IDENT_RE.match(value):
        raise GraphFormatError(f"{what} must match [A-Za-z0-9_]+, got {value!r}")
    if value in _RESERVED:
        raise GraphFormatError(f"{what} {value!r} is a reserved word")
    return value


def finite_graph(atoms, coherent_pairs) -> FiniteGraph:
    """Build a finite graph, applying symmetric closure and dropping loops."""
    atom_tuple = tuple(sorted({_check_ident(a, "atom") for a in atoms}))
    atom_set = frozenset(atom_tuple)
    pairs = set()
    for entry in coherent_pairs:
        try:
            a, b = entry
        except (TypeError, ValueError):
            raise GraphFormatError(f"coherence entry {entry!r} is not a pair") from None
        for x in (a, b):
            if x not in atom_set:
                raise GraphFormatError(f"unknown atom {x!r} in coherence pair")
        if a != b:
            pairs.add(frozenset((a, b)))
    return FiniteGraph(atom_tuple, frozenset(pairs))


def anticlique_graph(prefix: str) -> AnticliqueGraph:
    return AnticliqueGraph(_check_ident(prefix, "prefix"))


def product_graph(components) -> ProductGraph:
    """Build a product from {index: base graph}; components must not be products."""
    items = []
    for index, comp in dict(components).items():
        _check_ident(index, "component index")
        if not isinstance(comp, CoherenceGraph):
            raise GraphFormatError(f"component {index!r} is not a graph")
        if isinstance(comp, ProductGraph):
            raise GraphFormatError("nested products are not supported")
        items.append((index, comp))
    return ProductGraph(tuple(sorted(items)))


def _reject_duplicate_keys(pairs):
    seen = set()
    for key, _ in pairs:
        if key in seen:
            raise GraphFormatError(f"duplicate key {key!r} in graph document")
        seen.add(key)
    return dict(pairs)


def graph_from_obj(obj, *, _nested: bool = False) -> CoherenceGraph:
    if not isinstance(obj, dict):
        raise GraphFormatError("graph document must be a JSON object")
    kind = obj.get("kind")
    if kind == "finite":
        coh = obj.get("coh", [])
        if not isinstance(coh, list):
            raise GraphFormatError("graph field 'coh' must be a list")
        return finite_graph(_expect_list(obj, "atoms"), coh)
    if kind == "anticlique":
        return anticlique_graph(obj.get("prefix"))
    if kind == "product":
        if _nested:
            raise GraphFormatError("nested products are not supported")
        components = obj.get("components")
        if not isinstance(components, dict):
            raise GraphFormatError("product graph needs a 'components' object")
        return product_graph(
            {i: graph_from_obj(c, _nested=True) for i, c in components.items()}
        )
    raise GraphFormatError(f"unknown graph kind {kind!r}")


def _expect_list(obj, key):
    value = obj.get(key)
    if not isinstance(value, list):
        raise GraphFormatError(f"graph field {key!r} must be a list")
    return value


def load_graph(text: str) -> CoherenceGraph:
    """Parse a graph-definition JSON document (see README for the schema)."""
    try:
        obj = json.loads(text, object_pairs_hook=_reject_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from exc
    return graph_from_obj(obj)
