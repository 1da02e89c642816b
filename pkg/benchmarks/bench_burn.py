#!/usr/bin/env python3
"""Timing comparison of the compiled and pure-Python burning kernels.

Runs the raw kernels on identical flattened adjacency at two sizes per
graph family, then reports per-kernel times, the compiled speedup, and the
large/small scaling ratio (linear behaviour shows up as roughly the size
ratio).  End-to-end times for the active high-level API are also shown.

Usage:
    python benchmarks/bench_burn.py [--small 10000] [--large 100000] [--repeats 5]
"""

import argparse
import random
import time
from array import array

from dfsburn import Graph, ParkingFunction, dfs_burn, kernel_backend
from dfsburn import _burn_py

try:
    from dfsburn import _burncore
except ImportError:
    _burncore = None


def random_connected_graph(n, m, seed=7):
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for a, b in zip(order, order[1:]):
        edges.add((a, b) if a < b else (b, a))
    while len(edges) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((u, v) if u < v else (v, u))
    return Graph(n, sorted(edges), root=0)


def time_kernel(kernel, g, repeats):
    starts, flat = g.csr()
    best = float("inf")
    for _ in range(repeats):
        water = array("i", [0]) * g.n_vertices
        started = time.perf_counter()
        kernel.burn(starts, flat, g.root, water)
        best = min(best, time.perf_counter() - started)
    return best


def time_api(g, repeats):
    p = ParkingFunction.zero(g)
    best = float("inf")
    for _ in range(repeats):
        started = time.perf_counter()
        dfs_burn(g, p)
        best = min(best, time.perf_counter() - started)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--small", type=int, default=10_000)
    parser.add_argument("--large", type=int, default=100_000)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    print(f"active backend: {kernel_backend()}")
    if _burncore is None:
        print("compiled kernel not built; showing pure-Python times only")

    cases = [
        ("path", Graph.path(args.small), Graph.path(args.large)),
        (
            "random (5x edges)",
            random_connected_graph(args.small, 5 * args.small),
            random_connected_graph(args.large, 5 * args.large),
        ),
    ]

    header = f"{'graph':<18} {'vertices':>9} {'edges':>8} {'python':>10}"
    if _burncore is not None:
        header += f" {'compiled':>10} {'speedup':>8}"
    print(header)

    ratios = {}
    for name, small_g, large_g in cases:
        for g in (small_g, large_g):
            t_py = time_kernel(_burn_py, g, args.repeats)
            line = f"{name:<18} {g.n_vertices:>9} {g.num_edges:>8} {t_py * 1e3:>8.2f}ms"
            ratios.setdefault(("python", name), []).append(t_py)
            if _burncore is not None:
                t_cy = time_kernel(_burncore, g, args.repeats)
                ratios.setdefault(("compiled", name), []).append(t_cy)
                line += f" {t_cy * 1e3:>8.2f}ms {t_py / t_cy:>7.1f}x"
            print(line)

    print("\nscaling ratio (large/small, ~linear expected):")
    for (backend, name), times in ratios.items():
        print(f"  {backend:<9} {name:<18} x{times[1] / times[0]:.1f}")

    large = cases[1][2]
    print(f"\nend-to-end dfs_burn on random large graph ({kernel_backend()} backend): "
          f"{time_api(large, args.repeats) * 1e3:.2f}ms")


if __name__ == "__main__":
    main()
