"""Command-line front door: load a graph, parse terms, pick an engine, report.

Engine auto-selection: finite graphs use the lattice engine for
implication-free terms and the FAN engine otherwise; anticlique graphs use the
representative calculus; product graphs use the vector engine.  ``--engine``
overrides the choice for differential testing from the shell.

Exit codes: 0 = holds / success, 1 = fails, 2 = error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import terms as tm
from .anticlique import ac_leq, to_representative
from .errors import ObskitError, UnsupportedOperationError
from .fan import fan_leq, to_lattice_term
from .graph import CoherenceGraph, load_graph
from .lattice import DEFAULT_MAX_BRACKET, dnf, lat_leq
from .oracle import eval_term, format_semset, oracle_leq
from .product import (
    DEFAULT_MAX_VECTORS,
    disjunctive_rep,
    engines_for,
    format_representative,
    prod_leq,
)

ENGINES = ("lattice", "fan", "anticlique", "product", "oracle")


def _load(path: str) -> CoherenceGraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ObskitError(f"cannot read graph file: {exc}") from exc
    return load_graph(text)


def _select_engine(g: CoherenceGraph, terms: list[tm.Term], override: str | None) -> str:
    if override is not None:
        _check_engine(g, terms, override)
        return override
    if g.kind == "finite":
        if all(tm.is_lattice_term(t) for t in terms):
            return "lattice"
        return "fan"
    if g.kind == "anticlique":
        return "anticlique"
    return "product"


def _check_engine(g: CoherenceGraph, terms: list[tm.Term], engine: str) -> None:
    if engine == "lattice" and not all(tm.is_lattice_term(t) for t in terms):
        raise UnsupportedOperationError(
            "the lattice engine handles implication-free terms only"
        )
    if engine == "fan" and not g.has_fan:
        raise UnsupportedOperationError(
            "the fan engine needs finite anti-neighbourhoods"
        )
    if engine == "anticlique" and g.kind != "anticlique":
        raise UnsupportedOperationError("the anticlique engine needs an anticlique graph")
    if engine == "product" and g.kind != "product":
        raise UnsupportedOperationError("the product engine needs a product graph")
    if engine == "oracle" and g.finite_atoms() is None:
        raise UnsupportedOperationError(
            "the oracle needs a graph with finitely many atoms"
        )


def _engine_leq(g, engine, s, t, args) -> bool:
    if engine == "lattice":
        return lat_leq(g, s, t, args.max_bracket)
    if engine == "fan":
        return fan_leq(g, s, t, args.max_bracket)
    if engine == "anticlique":
        return ac_leq(g, s, t)
    if engine == "product":
        engines = engines_for(g, args.max_bracket)
        return prod_leq(g, engines, s, t, args.max_vectors)
    return oracle_leq(g, s, t)


def _print_witness(g, s, t) -> None:
    """Least counterexample clique from the oracle semantics, preferring a
    nonempty one (an actual report) over the empty clique."""
    difference = eval_term(g, s) - eval_term(g, t)
    if difference:
        pool = {c for c in difference if c} or difference
        witness = min(pool, key=lambda c: (len(c), sorted(c)))
        print("witness: {" + ", ".join(sorted(witness)) + "}")


def cmd_check(args) -> int:
    g = _load(args.graph)
    s = tm.parse_term(args.term1)
    t = tm.parse_term(args.term2)
    engine = _select_engine(g, [s, t], args.engine)
    forward = _engine_leq(g, engine, s, t, args)
    if args.relation == "leq":
        holds = forward
        failing = (s, t)
    else:
        backward = forward and _engine_leq(g, engine, t, s, args)
        holds = forward and backward
        failing = (s, t) if not forward else (t, s)
    print("HOLDS" if holds else "FAILS")
    if not holds and args.witness:
        if g.finite_atoms() is not None:
            _print_witness(g, *failing)
        else:
            print("witness: unavailable for this graph", file=sys.stderr)
    return 0 if holds else 1


def cmd_normalize(args) -> int:
    g = _load(args.graph)
    t = tm.parse_term(args.term)
    engine = _select_engine(g, [t], args.engine)
    if engine == "lattice":
        print(tm.print_term(dnf(g, t, args.max_bracket)))
    elif engine == "fan":
        lowered = to_lattice_term(g, t, args.max_bracket)
        print(tm.print_term(dnf(g, lowered, args.max_bracket)))
    elif engine == "anticlique":
        print(to_representative(g, t))
    elif engine == "product":
        engines = engines_for(g, args.max_bracket)
        print(format_representative(disjunctive_rep(g, t, engines, args.max_vectors)))
    else:
        raise UnsupportedOperationError(
            "the oracle has no normal form; use the oracle command"
        )
    return 0


def cmd_oracle(args) -> int:
    g = _load(args.graph)
    t = tm.parse_term(args.term)
    if g.finite_atoms() is None:
        raise UnsupportedOperationError(
            "oracle evaluation needs a graph with finitely many atoms"
        )
    print(format_semset(eval_term(g, t)))
    return 0


def cmd_info(args) -> int:
    g = _load(args.graph)
    atoms = g.finite_atoms()
    print(f"kind: {g.kind}")
    print(f"atoms: {len(atoms) if atoms is not None else 'unbounded'}")
    print(f"fan: {'yes' if g.has_fan else 'no'}")
    return 0


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--engine", choices=ENGINES, default=None,
                        help="override engine auto-selection")
    parser.add_argument("--max-bracket", type=int, default=DEFAULT_MAX_BRACKET,
                        help="bracket-cardinality budget")
    parser.add_argument("--max-vectors", type=int, default=DEFAULT_MAX_VECTORS,
                        help="term-vector budget for product normalization")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="obskit",
        description="Decide containment and equivalence of observation terms "
        "over coherence graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="decide leq or equiv between two terms")
    check.add_argument("graph")
    check.add_argument("relation", choices=("leq", "equiv"))
    check.add_argument("term1")
    check.add_argument("term2")
    check.add_argument("--witness", action="store_true",
                       help="on failure, print an oracle counterexample clique")
    _add_common(check)
    check.set_defaults(func=cmd_check)

    normalize = sub.add_parser("normalize", help="print the engine's normal form")
    normalize.add_argument("graph")
    normalize.add_argument("term")
    _add_common(normalize)
    normalize.set_defaults(func=cmd_normalize)

    oracle = sub.add_parser("oracle", help="print the brute-force semantics of a term")
    oracle.add_argument("graph")
    oracle.add_argument("term")
    _add_common(oracle)
    oracle.set_defaults(func=cmd_oracle)

    info = sub.add_parser("info", help="print graph kind, atom count, FAN status")
    info.add_argument("graph")
    _add_common(info)
    info.set_defaults(func=cmd_info)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ObskitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
