"""Compare the compiled and pure-Python kernel backends on representative workloads.

    python benchmarks/bench_kernels.py [--repeat N] [--quick]

Each workload runs once per available backend (best of ``--repeat`` runs);
results must agree between backends, and the script exits nonzero if they
do not.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from gnswilf import kernels
from gnswilf.enumeration import PackedTree, RandomWalk, enumerate_genus
from gnswilf.gns import Gns, minimal_generators, validate_hole_set
from gnswilf.sweep import run_sweep
from gnswilf.wilf import make_ordinary


def count_tree(d, g):
    return lambda: enumerate_genus(d, g)


def walk(d, g, seed):
    def run():
        w = RandomWalk(d, g, random.Random(seed))
        return w.tree.to_gns(w.path()[-1]).holes
    return run


def generators(f):
    holes = make_ordinary(f).holes

    def run():
        # a fresh object each time so the generator cache is cold
        return minimal_generators(Gns(len(f), holes, _trusted=True))
    return run


def validate(d, g, seed):
    w = RandomWalk(d, g, random.Random(seed))
    holes = w.tree.to_gns(w.path()[-1]).holes
    return lambda: validate_hole_set(d, holes).holes


def sweep(d, g, trials):
    return lambda: run_sweep(d, g, "random", trials=trials, seed=1).key()


def workloads(quick: bool):
    s = 1 if quick else 2
    return [
        (f"enumerate d=2 g={6 + s}", count_tree(2, 6 + s)),
        (f"enumerate d=3 g={3 + s}", count_tree(3, 3 + s)),
        (f"random walk d=4 g={150 * s}", walk(4, 150 * s, 7)),
        ("generators ordinary (4,4,4)", generators((4, 4, 4))),
        (f"validate d=3 g={150 * s}", validate(3, 150 * s, 3)),
        (f"random sweep d=3 g=100 trials={5 * s}", sweep(3, 100, 5 * s)),
    ]


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller instances")
    args = ap.parse_args(argv)

    names = [b.BACKEND for b in kernels.available_backends()]
    if "cython" not in names:
        print("compiled kernels not built; only the Python backend is timed", file=sys.stderr)
    print(f"{'workload':40s}" + "".join(f"{n:>12s}" for n in names) + ("     speedup" if len(names) == 2 else ""))
    mismatch = False
    for label, fn in workloads(args.quick):
        times, results = [], []
        for n in names:
            kernels.force_backend(n)
            try:
                t, r = best_of(fn, args.repeat)
            finally:
                kernels.force_backend(None)
            times.append(t)
            results.append(r)
        same = all(r == results[0] for r in results)
        mismatch |= not same
        row = f"{label:40s}" + "".join(f"{t:11.3f}s" for t in times)
        if len(times) == 2:
            row += f"{times[1] / times[0]:11.1f}x"
        print(row + ("" if same else "   RESULTS DIFFER"))
    return 1 if mismatch else 0


if __name__ == "__main__":
    sys.exit(main())
