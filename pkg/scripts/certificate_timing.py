"""Time certificate construction from a given ordering as n grows.

For each n a random interval containment model is drawn; its graph and
left-endpoint ordering are handed to the model constructor, and the rebuilt
model is converted to a word and verified. The word has length 2n and the
verifier inspects every pair of letters, so doubling n should roughly
quadruple the time.

    python3 scripts/certificate_timing.py --sizes 50 100 200 400 800
"""
from __future__ import annotations

import argparse
import random
import time

from twelverep.graphs import LabeledGraph, labeling_from_order
from twelverep.models import IntervalModel, icb_to_representant, ordering_to_icb_model, validate_icb
from twelverep.words import u_represents


def random_model(n: int, rng: random.Random) -> IntervalModel:
    ends = list(range(1, 2 * n + 1))
    rng.shuffle(ends)
    intervals = {v: tuple(sorted(ends[2 * v:2 * v + 2])) for v in range(n)}
    xs = frozenset(v for v in range(n) if rng.random() < 0.5)
    return IntervalModel(intervals, xs, frozenset(range(n)) - xs)


def time_once(n: int, rng: random.Random) -> tuple[float, float]:
    m = random_model(n, rng)
    g = m.graph()
    order = labeling_from_order(sorted(range(n), key=lambda v: m.intervals[v][0]))
    start = time.perf_counter()
    built = ordering_to_icb_model(g, (m.xs, m.ys), order)
    labels, w = icb_to_representant(built)
    build = time.perf_counter() - start
    ok = validate_icb(g, built)[0] and u_represents(w, LabeledGraph(g, labels))
    if not ok:
        raise SystemExit(f"certificate failed at n={n}")
    return build, time.perf_counter() - start


def main(argv: list[str] | None = None) -> None:
    p = argparse.ArgumentParser(description="certificate construction timing")
    p.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200, 400, 800])
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)
    rng = random.Random(args.seed)
    print(f"{'n':>6}  {'build s':>9}  {'build+verify s':>14}  {'ratio':>6}")
    prev = None
    for n in args.sizes:
        build, total = time_once(n, rng)
        ratio = f"{total / prev:6.2f}" if prev else "     -"
        print(f"{n:>6}  {build:9.4f}  {total:14.4f}  {ratio}")
        prev = total


if __name__ == "__main__":
    main()
