#!/usr/bin/env python3
"""Time the pure-Python search kernels against the compiled twins.

Both backends run the same algorithms on identical seeded inputs, so the
table below is a pure dispatch/loop-overhead comparison.  Run from a
checkout with the package installed:

    python3 benchmarks/bench_kernels.py [--repeats 5] [--seed 1]
"""

import argparse
import time

from rbminor.constructions import derive_seed, random_graph
from rbminor.graphs import Graph
from rbminor.kernels import pykernels

try:
    from rbminor.kernels import _ckernels
except ImportError:
    _ckernels = None


def balanced_coloring(g: Graph) -> list[int]:
    """Red masks that keep the graph RB-bipartite: red edges cross a fixed
    even/odd vertex split.  Forces the R-odd search to exhaust the whole
    cycle space instead of exiting early."""
    red = [0] * g.vertex_count
    for u, v in g.edges:
        if u % 2 != v % 2:
            red[u] |= 1 << v
            red[v] |= 1 << u
    return red


def workloads(seed: int):
    dense = random_graph(11, 0.5, derive_seed(seed, 0))
    parity_host = random_graph(13, 0.4, derive_seed(seed, 1))
    minor_host = random_graph(12, 0.5, derive_seed(seed, 2))
    tk_host = random_graph(11, 0.5, derive_seed(seed, 3))
    compat_host = random_graph(12, 0.45, derive_seed(seed, 4))

    def masks(g):
        return list(g.adjacency_masks)

    red = balanced_coloring(parity_host)
    return [
        ("all_simple_cycles", lambda impl: impl.all_simple_cycles(11, masks(dense))),
        (
            "first_r_odd_cycle",
            lambda impl: impl.first_r_odd_cycle(13, masks(parity_host), red),
        ),
        ("find_kt_model", lambda impl: impl.find_kt_model(12, masks(minor_host), 7)),
        ("has_tk", lambda impl: impl.has_tk(11, masks(tk_host), 5)),
        ("find_compatible", lambda impl: impl.find_compatible(12, masks(compat_host), 5)),
    ]


def best_of(fn, impl, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(impl)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    rows = []
    for name, fn in workloads(args.seed):
        pure = best_of(fn, pykernels, args.repeats)
        if _ckernels is not None:
            comp = best_of(fn, _ckernels, args.repeats)
            assert fn(pykernels) == fn(_ckernels), name
            rows.append((name, pure, comp, pure / comp))
        else:
            rows.append((name, pure, None, None))

    header = f"{'kernel':<20} {'pure ms':>10} {'compiled ms':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, pure, comp, ratio in rows:
        if comp is None:
            print(f"{name:<20} {pure * 1e3:>10.2f} {'n/a':>12} {'n/a':>8}")
        else:
            print(f"{name:<20} {pure * 1e3:>10.2f} {comp * 1e3:>12.2f} {ratio:>7.1f}x")
    if _ckernels is None:
        print("\ncompiled backend not built; showing pure timings only")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
