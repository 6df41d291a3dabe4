"""Compare the compiled polynomial kernels against the pure-Python fallback.

Runs the same representative workload under both backends and prints the
timings side by side.  Usage:

    python3 benchmarks/bench_backends.py [--order N] [--repeat K]
"""

import argparse
import time

from dispdyck import backend
from dispdyck import closedforms as cf
from dispdyck.automaton import builtin_spec, closed_series, dp_run
from dispdyck.paths import Statistic


def workload(order):
    """Closed forms plus a full DP sweep for all four families."""
    for fam in Statistic:
        f0 = cf.cf_closed(fam, order)
        f0.dt_at1()
        f0.eval_t(1)
        spec = builtin_spec(fam)
        closed_series(spec, order, table=dp_run(spec, order))


def timed(which, order, repeat):
    backend.use(which)
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        workload(order)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order", type=int, default=64,
                        help="series truncation order (default 64)")
    parser.add_argument("--repeat", type=int, default=3,
                        help="repetitions, best-of (default 3)")
    args = parser.parse_args()

    available = backend.available()
    if "compiled" not in available:
        print("note: compiled backend unavailable, timing pure only")

    results = {}
    for which in sorted(available):
        results[which] = timed(which, args.order, args.repeat)
        print(f"{which:>8}: {results[which] * 1000:8.1f} ms  "
              f"(order {args.order}, best of {args.repeat})")

    if len(results) == 2:
        ratio = results["pure"] / results["compiled"]
        print(f"speedup: compiled is {ratio:.2f}x faster than pure")


if __name__ == "__main__":
    main()
