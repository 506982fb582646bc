#!/usr/bin/env python3
"""Compare the compiled and pure-Python candidate-trial kernels.

Generates one clique-core family graph per size, enumerates a fixed number
of minimal dominating sets with each kernel and reports preprocessing time,
maximum and mean inter-output delay, and total time.

Usage: python benchmarks/compare_kernels.py [--sizes 2000,4000,8000]
       [--solutions 10000] [--seed 1]
"""

import argparse
import gc
import time

from domdelay._kernel import compiled_available, get_kernel
from domdelay.domenum import enumerate_dom
from domdelay.generators import gen_pk_free_chordal
from domdelay.redundancy import classify
from domdelay.rnenum import P7Engine


def profile(g, kernel, limit):
    t0 = time.perf_counter()
    cls = classify(g)
    stream = enumerate_dom(g, "p7", cls=cls, kernel=kernel)
    gc.disable()
    try:
        next(stream)  # engine construction counts as preprocessing
        prep = time.perf_counter() - t0
        last = time.perf_counter_ns()
        delays = []
        for count, _ in enumerate(stream, start=2):
            now = time.perf_counter_ns()
            delays.append(now - last)
            last = now
            if count >= limit:
                break
    finally:
        gc.enable()
    return {
        "prep_ms": prep * 1e3,
        "solutions": len(delays) + 1,
        "max_ms": max(delays) / 1e6,
        "mean_us": sum(delays) / len(delays) / 1e3,
        "total_s": sum(delays) / 1e9,
    }


def trial_throughput(g, cls, kernel_name):
    """Single-candidate trials per second: one trial plus an immediate
    undo for every redundant vertex, the kernel's hot operation."""
    eng = P7Engine(g, cls, get_kernel(kernel_name))
    total = len(eng.rn_sorted)
    t0 = time.perf_counter()
    for pos in range(total):
        res = eng.scan_accept(pos, pos + 1)
        if res is not None:
            eng.undo_commit(eng.rn_sorted[pos], res[1])
    elapsed = time.perf_counter() - t0
    return total / elapsed


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="2000,4000,8000")
    ap.add_argument("--solutions", type=int, default=10000)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    kernels = ["python"]
    if compiled_available():
        kernels.insert(0, "compiled")
    else:
        print("note: compiled kernel not built, profiling pure Python only")

    header = f"{'n':>6} {'kernel':>9} {'prep ms':>9} {'max ms':>8} {'mean us':>9} {'total s':>8}"
    print(header)
    print("-" * len(header))
    rows = {}
    for n in sizes:
        g = gen_pk_free_chordal(n, 7, seed=args.seed)
        for kernel in kernels:
            r = profile(g, kernel, args.solutions)
            rows[(n, kernel)] = r
            print(
                f"{n:>6} {kernel:>9} {r['prep_ms']:>9.1f} {r['max_ms']:>8.2f} "
                f"{r['mean_us']:>9.1f} {r['total_s']:>8.2f}"
            )
    if len(kernels) == 2:
        print()
        for n in sizes:
            total = rows[(n, "python")]["total_s"] / rows[(n, "compiled")]["total_s"]
            worst = rows[(n, "python")]["max_ms"] / rows[(n, "compiled")]["max_ms"]
            print(
                f"n={n}: compiled vs python -- {total:.1f}x on total time, "
                f"{worst:.1f}x on worst-case delay"
            )
        print()
        print("candidate trial+undo throughput (the kernel's hot operation):")
        for n in sizes:
            g = gen_pk_free_chordal(n, 7, seed=args.seed)
            cls = classify(g)
            rates = {k: trial_throughput(g, cls, k) for k in kernels}
            print(
                f"n={n}: compiled {rates['compiled']:,.0f}/s, "
                f"python {rates['python']:,.0f}/s "
                f"({rates['compiled'] / rates['python']:.1f}x)"
            )


if __name__ == "__main__":
    main()
