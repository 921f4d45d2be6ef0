#!/usr/bin/env python3
"""Differential fuzzer: random graphs and terms, engine verdict vs oracle.

Examples:
    python3 scripts/fuzz_engines.py --kind finite --count 5000
    python3 scripts/fuzz_engines.py --kind product --count 2000 --seed 7
    python3 scripts/fuzz_engines.py --kind anticlique --max-size 14
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from dataclasses import dataclass
from itertools import combinations

from obskit import (
    BudgetExceededError,
    ac_leq,
    ac_oracle_leq,
    anticlique_graph,
    anticlique_model,
    atoms_of,
    engines_for,
    fan_leq,
    finite_graph,
    oracle_leq,
    print_term,
    prod_leq,
    product_graph,
    split_atom,
)


@dataclass
class FuzzConfig:
    kind: str = "finite"
    count: int = 2000
    seed: int = 0
    max_atoms: int = 5
    max_size: int = 10
    max_components: int = 3


def random_term(rng, atoms, size):
    from obskit import And, Atom, BOT, Impl, Or, TOP

    if size <= 1:
        roll = rng.random()
        if roll < 0.75 and atoms:
            return Atom(rng.choice(atoms))
        return TOP if roll < 0.875 else BOT
    op = rng.choice([And, Or, Impl])
    split = rng.randint(1, size - 1)
    return op(random_term(rng, atoms, split), random_term(rng, atoms, size - split))


def random_finite(rng, n):
    names = [f"v{k}" for k in range(n)]
    pairs = [p for p in combinations(names, 2) if rng.random() < rng.random()]
    return finite_graph(names, pairs)


def one_instance(cfg: FuzzConfig, rng):
    size = rng.randint(1, cfg.max_size)
    if cfg.kind == "finite":
        g = random_finite(rng, rng.randint(1, cfg.max_atoms))
        atoms = list(g.finite_atoms())
        s, t = random_term(rng, atoms, size), random_term(rng, atoms, size)
        return fan_leq(g, s, t), oracle_leq(g, s, t), g, s, t
    if cfg.kind == "anticlique":
        g = anticlique_graph("n")
        atoms = [f"n{k}" for k in range(1, cfg.max_atoms + 1)]
        s, t = random_term(rng, atoms, size), random_term(rng, atoms, size)
        return ac_leq(g, s, t), ac_oracle_leq(s, t), g, s, t
    if cfg.kind == "mixed":
        # One anticlique cell among finite ones; the oracle runs on the product
        # with that cell replaced by a finite identity graph over the mentioned
        # atoms plus two fresh ones, which decides identically.
        base = {"1": random_finite(rng, rng.randint(1, 3))}
        p = product_graph({**base, "2": anticlique_graph("n")})
        atoms = [f"{a}@1" for a in base["1"].finite_atoms()]
        atoms += [f"n{k}@2" for k in range(1, 4)]
        s, t = random_term(rng, atoms, size), random_term(rng, atoms, size)
        mentioned = {
            name
            for x in atoms_of(s) | atoms_of(t)
            for name, idx in [split_atom(x)]
            if idx == "2"
        }
        substituted = product_graph({**base, "2": anticlique_model(mentioned)})
        return prod_leq(p, engines_for(p), s, t), oracle_leq(substituted, s, t), p, s, t
    comps = {
        str(i + 1): random_finite(rng, rng.randint(1, 3))
        for i in range(rng.randint(2, cfg.max_components))
    }
    p = product_graph(comps)
    atoms = list(p.finite_atoms())
    s, t = random_term(rng, atoms, size), random_term(rng, atoms, size)
    return prod_leq(p, engines_for(p), s, t), oracle_leq(p, s, t), p, s, t


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--kind",
                        choices=("finite", "anticlique", "product", "mixed"),
                        default="finite")
    parser.add_argument("--count", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-atoms", type=int, default=5)
    parser.add_argument("--max-size", type=int, default=10)
    args = parser.parse_args()
    cfg = FuzzConfig(args.kind, args.count, args.seed, args.max_atoms, args.max_size)

    rng = random.Random(cfg.seed)
    started = time.time()
    mismatches = budget = 0
    for k in range(cfg.count):
        try:
            engine_says, oracle_says, g, s, t = one_instance(cfg, rng)
        except BudgetExceededError:
            budget += 1
            continue
        if engine_says != oracle_says:
            mismatches += 1
            print(f"MISMATCH [{k}] engine={engine_says} oracle={oracle_says}")
            print(f"  s = {print_term(s)}")
            print(f"  t = {print_term(t)}")
    elapsed = time.time() - started
    rate = cfg.count / elapsed if elapsed else float("inf")
    print(
        f"{cfg.kind}: {cfg.count} instances in {elapsed:.1f}s ({rate:.0f}/s), "
        f"{mismatches} mismatches, {budget} budget stops"
    )
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
