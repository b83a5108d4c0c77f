"""Compare the compiled and NumPy kernels on the full switch sweep.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

import numpy as np

from uindep import _kernels_py
from uindep.catalog import load_catalog
from uindep.conway import conway_to_pd
from uindep.oracle import _pair_tables

try:
    from uindep._ext import _kernels as compiled
except ImportError:
    compiled = None

CASES = [
    ("8_3", lambda: load_catalog("8_3")),
    ("10_8", lambda: load_catalog("10_8")),
    ("(9,1,2)", lambda: conway_to_pd((9, 1, 2))),
    ("(7,1,6)", lambda: conway_to_pd((7, 1, 6))),
]


def sweep(mod, d):
    p0, p1 = _pair_tables(d)
    loops = mod.state_loop_counts(p0, p1, d.edge_count)
    targets = np.arange(1 << d.n, dtype=np.int64) ^ d.flag_mask()
    return mod.switch_histograms(loops, d.n, targets)


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'diagram':<10}{'n':>4}{'numpy (s)':>12}{'cython (s)':>12}{'speedup':>9}")
    for name, make in CASES:
        d = make()
        t_py, h_py = best_of(lambda: sweep(_kernels_py, d), args.repeat)
        if compiled is None:
            print(f"{name:<10}{d.n:>4}{t_py:>12.3f}{'n/a':>12}{'':>9}")
            continue
        t_c, h_c = best_of(lambda: sweep(compiled, d), args.repeat)
        assert np.array_equal(h_py, h_c), "backends disagree"
        print(f"{name:<10}{d.n:>4}{t_py:>12.3f}{t_c:>12.3f}{t_py / t_c:>8.1f}x")


if __name__ == "__main__":
    main()
