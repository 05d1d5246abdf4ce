"""Compiled vs pure-Python planarity kernel, alone and inside the exact solver.

    python benchmarks/bench_planarity.py [--repeat 5]
"""

from __future__ import annotations

import argparse
import itertools
import random
import timeit
from contextlib import contextmanager

from thickness_lab import _kernels
from thickness_lab.construction import build_decomposition
from thickness_lab.graph import Graph, complete_graph, kn_pm
from thickness_lab.solver import thickness_exact


def planarity_cases() -> dict[str, tuple[int, list[tuple[int, int]]]]:
    rng = random.Random(0)
    pairs = list(itertools.combinations(range(12), 2))
    return {
        "K8 (nonplanar, 28 edges)": (8, list(complete_graph(8).edges)),
        "K8 minus 10 edges (18 edges)": (8, list(complete_graph(8).edges)[:18]),
        "K8xP16 part 1 (planar, 288 edges)": (128, list(build_decomposition(16).part1)),
        "random G(12, 30)": (12, rng.sample(pairs, 30)),
    }


def solver_cases() -> dict[str, Graph]:
    return {"K6": complete_graph(6), "K8": complete_graph(8), "K4xP2": kn_pm(4, 2)}


@contextmanager
def backend(fn):
    saved = _kernels.is_planar_edges
    _kernels.is_planar_edges = fn
    try:
        yield
    finally:
        _kernels.is_planar_edges = saved


def best_of(stmt, repeat: int, number: int) -> float:
    return min(timeit.repeat(stmt, repeat=repeat, number=number)) / number


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    fast = _kernels.compiled_is_planar_edges
    slow = _kernels.python_is_planar_edges
    if fast is None:
        raise SystemExit("compiled kernel not built; run `pip install -e . --no-build-isolation` first")

    print(f"{'planarity call':40s} {'cython':>12s} {'python':>12s} {'speedup':>8s}")
    for name, (n, edges) in planarity_cases().items():
        assert fast(n, edges) == slow(n, edges)
        tf = best_of(lambda: fast(n, edges), args.repeat, 2000)
        ts = best_of(lambda: slow(n, edges), args.repeat, 200)
        print(f"{name:40s} {tf * 1e6:10.1f}us {ts * 1e6:10.1f}us {ts / tf:7.1f}x")

    print(f"\n{'solver run':40s} {'cython':>12s} {'python':>12s} {'speedup':>8s}")
    for name, g in solver_cases().items():
        times = {}
        for label, fn in (("cython", fast), ("python", slow)):
            with backend(fn):
                times[label] = best_of(lambda: thickness_exact(g), args.repeat, 1)
        tf, ts = times["cython"], times["python"]
        print(f"{name:40s} {tf * 1e3:10.2f}ms {ts * 1e3:10.2f}ms {ts / tf:7.1f}x")


if __name__ == "__main__":
    main()
