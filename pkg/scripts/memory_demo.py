#!/usr/bin/env python3
"""Worked example: a memory of typed cells as a product of value graphs.

Each cell is a component whose atoms are its possible values, pairwise
incoherent (a cell holds one value at a time).  Atoms read as `value@cell`.
Cell equality `cell i == cell j` is encoded as the join of the pairwise
agreement meets over the shared value set.
"""

from __future__ import annotations

from obskit import (
    And,
    Atom,
    BOT,
    Impl,
    big_or,
    engines_for,
    finite_graph,
    format_representative,
    disjunctive_rep,
    parse_term,
    print_term,
    prod_leq,
    product_graph,
)

CELLS = {
    "x": ("0", "1"),
    "y": ("0", "1"),
    "z": ("red", "green", "blue"),
}


def value_graph(values):
    return finite_graph(values, [])


def cells_agree(i, j):
    shared = sorted(set(CELLS[i]) & set(CELLS[j]))
    return big_or(
        And(Atom(f"{v}@{i}"), Atom(f"{v}@{j}")) for v in shared
    )


def main() -> None:
    memory = product_graph({name: value_graph(vals) for name, vals in CELLS.items()})
    engines = engines_for(memory)

    def check(what, s, t):
        verdict = prod_leq(memory, engines, s, t)
        print(f"{'HOLDS' if verdict else 'FAILS':6}  {what}")

    print(f"memory cells: {', '.join(sorted(CELLS))}")
    print(f"atoms: {len(memory.finite_atoms())}\n")

    eq_xy = cells_agree("x", "y")
    print(f"x == y  is encoded as  {print_term(eq_xy)}\n")

    check("x=0 and x==y entails y=0", And(parse_term("0@x"), eq_xy), parse_term("0@y"))
    check("x=0 entails y=0", parse_term("0@x"), parse_term("0@y"))
    check(
        "x=1 rules out x=0 (witnessed negation)",
        parse_term("1@x"),
        Impl(parse_term("0@x"), BOT),
    )
    check("z=red and z=green is absurd", parse_term("red@z & green@z"), BOT)
    check(
        "no report can pin z to some value a priori",
        parse_term("top"),
        parse_term("red@z | green@z | blue@z"),
    )
    check(
        "x==y and y=1 entails x=1",
        And(eq_xy, parse_term("1@y")),
        parse_term("1@x"),
    )

    print("\nnormal form of  x == y:")
    print(" ", format_representative(disjunctive_rep(memory, eq_xy, engines)))


if __name__ == "__main__":
    main()
