"""Time the compiled and pure-Python series kernels on identical inputs.

    python benchmarks/bench_kernels.py [--bits 192] [--terms 20000] [--repeat 3]

Both backends must return the same integers; the script exits 1 if they differ.
"""
from __future__ import annotations

import argparse
import sys
import time

from arcsine_moments.kernels import backends


def cases(bits: int, K: int):
    one = 1 << bits
    half = one // 2
    return [
        ("g_sum p=2 x=1 (1,)", "g_sum", (2, one, (1,), bits, K)),
        ("g_sum p=3 x^2=1/2 (1,3)", "g_sum", (3, half, (1, 3), bits, K)),
        ("h_sum p=2 x=1 (1,)", "h_sum", (2, one, (1,), bits, K)),
        ("h_sum p=4 x^2=1/2 ()", "h_sum", (4, half, (), bits, K)),
        ("odd_square_sum", "odd_square_sum", (bits, K)),
    ]


def best_of(fn, args, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bits", type=int, default=192)
    ap.add_argument("--terms", type=int, default=20000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    mods = backends()
    if "cython" not in mods:
        print("compiled backend not built; run `pip install -e . --no-build-isolation` first")
        return 1
    py, cy = mods["python"], mods["cython"]
    print(f"{'kernel':<28} {'python s':>10} {'cython s':>10} {'speedup':>8}  equal")
    ok = True
    for label, name, call in cases(args.bits, args.terms):
        tp, rp = best_of(getattr(py, name), call, args.repeat)
        tc, rc = best_of(getattr(cy, name), call, args.repeat)
        same = rp == rc
        ok &= same
        print(f"{label:<28} {tp:>10.4f} {tc:>10.4f} {tp / tc:>7.2f}x  {same}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
