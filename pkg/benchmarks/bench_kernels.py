"""Time the pure-Python and compiled kernels on the same workloads.

    python benchmarks/bench_kernels.py [--repeat 3] [--json out.json]

Workloads: maximum independent set size, maximum induced matching touching a
set, and the ordering search behind both exact oracles.  Results from the
two backends are compared before any timing is reported.
"""
import argparse
import json
import random
import statistics
import sys
import time

from imtw import kernels
from imtw.generators import gen_random_graph
from imtw.kernels import ALPHA, MU, make_kernel


def workloads(seed):
    rng = random.Random(seed)
    mis = [gen_random_graph(60, 0.1, rng.getrandbits(64)) for _ in range(20)]
    touch = [(gen_random_graph(24, 0.2, rng.getrandbits(64)), rng.getrandbits(24)) for _ in range(10)]
    order = [gen_random_graph(11, 0.55, rng.getrandbits(64)) for _ in range(10)]
    return {
        "mis_size n=60": lambda k: [k(G).mis_size(G.full_mask) for G in mis],
        "im_touching n=24": lambda k: [k(G).im_touching_size(X) for G, X in touch],
        "order_search alpha n=11": lambda k: [k(G).order_search(ALPHA) for G in order],
        "order_search mu n=11": lambda k: [k(G).order_search(MU) for G in order],
    }


def timed(fn, repeat):
    runs = []
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        runs.append(time.perf_counter() - start)
    return statistics.median(runs), result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--json", default=None, help="also write the table as JSON")
    args = ap.parse_args(argv)
    if not kernels.HAVE_COMPILED:
        print("compiled kernel not built; run `python setup.py build_ext --inplace` first", file=sys.stderr)
        return 1
    rows = []
    for name, work in workloads(args.seed).items():
        t_py, r_py = timed(lambda: work(lambda G: make_kernel(G.n, G.adj, "python")), args.repeat)
        t_cy, r_cy = timed(lambda: work(lambda G: make_kernel(G.n, G.adj, "cython")), args.repeat)
        if r_py != r_cy:
            print(f"backends disagree on {name}", file=sys.stderr)
            return 1
        rows.append({"workload": name, "python_s": t_py, "cython_s": t_cy, "speedup": t_py / max(t_cy, 1e-9)})
    width = max(len(r["workload"]) for r in rows)
    print(f"{'workload':<{width}}  {'python [s]':>11}  {'cython [s]':>11}  {'speedup':>8}")
    for r in rows:
        print(f"{r['workload']:<{width}}  {r['python_s']:>11.4f}  {r['cython_s']:>11.4f}  {r['speedup']:>7.1f}x")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
