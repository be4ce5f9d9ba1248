#!/usr/bin/env python3
"""Benchmark the pure-Python scan kernels against the compiled extension.

Runs each kernel on representative workloads (axiom scans on a trivial
structure over S4, an associativity sweep, the order-6 braiding check, and
the naive order-3 enumeration oracle loop) and prints a per-kernel timing
table with the speedup factor. Works with either implementation missing a
counterpart: if the extension is not built, only the Python column appears.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import sys
import time
from itertools import product
from pathlib import Path

try:
    import twistpost  # noqa: F401
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from twistpost._kernels import _pykernels

try:
    from twistpost._kernels import _ckernels
except ImportError:
    _ckernels = None

from twistpost.groups import symmetric


def _workloads():
    s4 = symmetric(4)
    n = s4.n
    mul = [list(r) for r in s4.mul]
    tri = [list(range(n)) for _ in range(n)]
    phi = list(range(n))

    s3 = symmetric(3)
    # conjugation braiding on six points
    r1 = [[b for b in range(6)] for _ in range(6)]
    r2 = [[s3.mul[s3.mul[s3.inv[b]][a]][b] for b in range(6)] for a in range(6)]

    z3 = [[(i + j) % 3 for j in range(3)] for i in range(3)]
    rows3 = [list(p) for p in product(range(3), repeat=3)]

    def oracle_loop(kernels):
        # the hot loop of the naive enumeration oracle at order 3
        count = 0
        for t0 in rows3:
            for t1 in rows3:
                for t2 in rows3:
                    w = kernels.left_scan(z3, [t0, t1, t2], [0, 1, 2])
                    if w == (None, None, None, None):
                        count += 1
        return count

    return [
        ("assoc_witness S4 (24^3 triples)", lambda k: k.assoc_witness(mul)),
        ("left_scan S4 trivial structure", lambda k: k.left_scan(mul, tri, phi)),
        ("right_scan S4 trivial structure",
         lambda k: k.right_scan(mul, [[a for _ in range(n)] for a in range(n)], phi)),
        ("braid_witness S3 conjugation", lambda k: k.braid_witness(r1, r2)),
        ("oracle scan Z3 (19683 tables)", oracle_loop),
    ]


def _time(fn, kernels, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(kernels)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    impls = [("python", _pykernels)]
    if _ckernels is not None:
        impls.append(("c", _ckernels))
    else:
        print("note: compiled kernels not built; showing pure Python only\n")

    width = 36
    header = f"{'workload':<{width}}" + "".join(f"{name:>12}" for name, _ in impls)
    if len(impls) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for label, fn in _workloads():
        times = []
        results = []
        for _, kernels in impls:
            took, result = _time(fn, kernels, args.repeat)
            times.append(took)
            results.append(result)
        if len(results) == 2 and results[0] != results[1]:
            raise SystemExit(f"implementations disagree on {label!r}")
        row = f"{label:<{width}}" + "".join(f"{t * 1000:>10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
