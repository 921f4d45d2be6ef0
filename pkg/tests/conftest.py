from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import settings, strategies as st

from obskit import (
    And,
    Atom,
    BOT,
    Impl,
    Or,
    TOP,
    anticlique_graph,
    finite_graph,
    product_graph,
)

settings.register_profile("obskit", deadline=None)
settings.load_profile("obskit")


@pytest.fixture
def g3():
    """Path graph a - b - c: the running three-atom example."""
    return finite_graph(["a", "b", "c"], [("a", "b"), ("b", "c")])


@pytest.fixture
def single_vertex():
    return finite_graph(["x"], [])


@pytest.fixture
def two_incoherent():
    return finite_graph(["x", "y"], [])


@pytest.fixture
def omega():
    return anticlique_graph("n")


@pytest.fixture
def boolean_component():
    return finite_graph(["0", "1"], [])


@pytest.fixture
def bb(boolean_component):
    """Product of two boolean components: a two-cell memory."""
    return product_graph({"1": boolean_component, "2": boolean_component})


def term_strategy(atom_names, with_impl=True, max_leaves=8):
    leaves = st.sampled_from([TOP, BOT] + [Atom(a) for a in atom_names])
    builders = [
        lambda inner: st.builds(And, inner, inner),
        lambda inner: st.builds(Or, inner, inner),
    ]
    if with_impl:
        builders.append(lambda inner: st.builds(Impl, inner, inner))
    return st.recursive(
        leaves, lambda inner: st.one_of(*(b(inner) for b in builders)), max_leaves=max_leaves
    )


@st.composite
def graph_and_terms(draw, max_atoms=4, n_terms=2, with_impl=True, max_leaves=8):
    """A random finite graph together with terms over its atoms."""
    n = draw(st.integers(1, max_atoms))
    names = [f"v{k}" for k in range(n)]
    slots = list(combinations(names, 2))
    edges = draw(st.sets(st.sampled_from(slots))) if slots else set()
    g = finite_graph(names, edges)
    terms = tuple(
        draw(term_strategy(names, with_impl, max_leaves)) for _ in range(n_terms)
    )
    return g, terms
