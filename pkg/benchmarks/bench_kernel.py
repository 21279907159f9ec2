"""Compare the compiled and pure-Python feasibility kernels.

Runs the full exact solve (``Tr_d2``) on seeded random graphs with each
backend, checks that value and node count agree, and prints per-size timings.

    python benchmarks/bench_kernel.py --sizes 10 14 18 --per-size 20
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time

from d2transit import SolverConfig, exact_d2_transitivity, kernel
from d2transit.generators import gnp


def _time(G, backend, repeat):
    cfg = SolverConfig(backend=backend)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        res = exact_d2_transitivity(G, cfg)
        best = min(best, time.perf_counter() - t0)
    return best, res


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 14, 18, 22])
    ap.add_argument("--per-size", type=int, default=15)
    ap.add_argument("--p", type=float, default=0.25, help="edge probability")
    ap.add_argument("--repeat", type=int, default=3, help="best-of repetitions per instance")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    if "cython" not in kernel.available_backends():
        print("compiled kernel not built; install with 'pip install -e . --no-build-isolation'", file=sys.stderr)
        return 1

    print(f"{'n':>4} {'graphs':>6} {'nodes(med)':>11} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for n in args.sizes:
        py_t, cy_t, nodes = [], [], []
        for i in range(args.per_size):
            G = gnp(n, args.p, seed=args.seed + 1000 * n + i)
            tp, rp = _time(G, "python", args.repeat)
            tc, rc = _time(G, "cython", args.repeat)
            if (rp.value, rp.nodes_explored) != (rc.value, rc.nodes_explored):
                print(f"backend mismatch on n={n} instance {i}", file=sys.stderr)
                return 2
            py_t.append(tp)
            cy_t.append(tc)
            nodes.append(rp.nodes_explored)
        tp, tc = sum(py_t), sum(cy_t)
        print(f"{n:>4} {args.per_size:>6} {statistics.median(nodes):>11.0f} "
              f"{1000 * tp / args.per_size:>10.2f} {1000 * tc / args.per_size:>10.3f} {tp / tc:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
