"""Time the jit and pure backends of the three hot kernels.

Run as a script: python3 benchmarks/bench_kernels.py [--repeat N]
Times are integer microseconds, best of N runs; the jit column warms
the compile cache before timing. SUPERLOCAL_NO_JIT=1 drops to the pure
column only.
"""

import argparse
import random
import time

import numpy as np

from superlocal import Multigraph, perm_edge_maps
from superlocal._kernels import (
    HAVE_JIT,
    edge_colouring_feasible,
    matching_dp,
    orbit_representatives,
)


def best_us(fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter_ns()
        fn()
        dt = (time.perf_counter_ns() - t0) // 1000
        best = dt if best is None else min(best, dt)
    return best


def matching_case(n=16, seed=7):
    rng = random.Random(seed)
    adj = np.zeros(n, np.int64)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.5:
                adj[u] |= 1 << v
                adj[v] |= 1 << u

    def run(backend):
        dp = np.zeros(1 << n, np.int32)
        matching_dp(adj, dp, backend=backend)
        return int(dp[-1])

    return f"matching_dp        n={n}", run


def orbit_case(n=6):
    pm = perm_edge_maps(n)
    e_bits = n * (n - 1) // 2

    def run(backend):
        return orbit_representatives(pm, e_bits, 16384, backend=backend).shape[0]

    return f"orbit_reps         n={n}", run


def edge_case():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    mg = Multigraph(10, outer + spokes + inner)
    eu = np.array([mg.endpoints(e)[0] for e in range(mg.edge_count)], np.int64)
    ev = np.array([mg.endpoints(e)[1] for e in range(mg.edge_count)], np.int64)

    def run(backend):
        # k=3 on the Petersen graph is the expensive infeasibility proof
        return edge_colouring_feasible(eu, ev, 3, 10, 10**9, backend=backend)

    return "edge_feasible      Petersen k=3", run


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    cases = [matching_case(), orbit_case(), edge_case()]
    backends = ["pure"] + (["jit"] if HAVE_JIT else [])
    if not HAVE_JIT:
        print("jit backend unavailable; timing pure only")

    header = f"{'case':<32}" + "".join(f"{b + ' (us)':>14}" for b in backends)
    if HAVE_JIT:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, run in cases:
        times = {}
        for b in backends:
            if b == "jit":
                run(b)  # compile outside the timed region
            times[b] = best_us(lambda: run(b), args.repeat)
        row = f"{name:<32}" + "".join(f"{times[b]:>14d}" for b in backends)
        if HAVE_JIT:
            row += f"{times['pure'] / max(times['jit'], 1):>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
