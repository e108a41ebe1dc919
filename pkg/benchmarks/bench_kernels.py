"""Compare the numba and pure-numpy kernel backends.

    python benchmarks/bench_kernels.py [--repeat 3] [--max-n 14]

Each row times one public operation on both backends (best of --repeat) and
checks that the two results are identical.
"""

import argparse
import time

import numpy as np

from fbct import analysis, kernels
from fbct.analysis import BoxedFunction
from fbct.field import get_field


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases(max_n):
    for n in range(10, max_n + 1, 2):
        f = BoxedFunction.paper(get_field(n))
        yield f"fbct ratio counts n={n}", lambda be, f=f: analysis.fbct_ratio_counts(f, threads=1, backend=be)
    f8 = BoxedFunction.paper(get_field(8))
    yield "fbct full table n=8", lambda be: analysis.fbct_table(f8, threads=1, backend=be)
    f7 = BoxedFunction.power(get_field(7), 7)
    yield "bct full table n=7", lambda be: analysis.bct_table(f7, threads=1, backend=be)
    f12 = BoxedFunction.power(get_field(12), 7)
    yield "ddt full table n=12", lambda be: analysis.ddt_table(f12, threads=1, backend=be)
    f16 = BoxedFunction.power(get_field(16), 3)
    a, b = get_field(16)(5), get_field(16)(9)
    yield "bct entry n=16", lambda be: analysis.bct_entry(f16, a, b, backend=be)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=14)
    args = ap.parse_args()

    # compile once so JIT time is not measured
    kernels.get("numba").fbct_block(np.arange(4, dtype=np.int64), np.arange(4), np.arange(4))
    analysis.bct_table(BoxedFunction.power(get_field(3), 3), backend="numba")
    analysis.ddt_table(BoxedFunction.power(get_field(3), 3), backend="numba")
    analysis.bct_entry(BoxedFunction.power(get_field(3), 3), get_field(3)(1), get_field(3)(1), backend="numba")

    print(f"{'operation':<28}{'numba [s]':>12}{'numpy [s]':>12}{'speedup':>10}  same")
    for label, fn in cases(args.max_n):
        t_nb, r_nb = best_of(lambda: fn("numba"), args.repeat)
        t_np, r_np = best_of(lambda: fn("numpy"), args.repeat)
        same = np.array_equal(np.asarray(r_nb), np.asarray(r_np))
        print(f"{label:<28}{t_nb:>12.4f}{t_np:>12.4f}{t_np / t_nb:>9.1f}x  {same}")


if __name__ == "__main__":
    main()
