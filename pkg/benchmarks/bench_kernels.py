"""Compare the compiled census kernel with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--n 6] [--repeat 3]

Both kernels scan every labelled graph on n vertices and must agree exactly.
"""

import argparse
import time

from distrank import _pykernels

try:
    from distrank import _kernels
except ImportError:
    _kernels = None


def timed(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    n = args.n
    total = 1 << (n * (n - 1) // 2)

    t_py, r_py = timed(lambda: _pykernels.scan(n, 0, total, 3), args.repeat)
    print(f"n={n} masks={total}")
    print(f"python  {t_py:9.3f} s  {total / t_py:12.0f} masks/s  connected={r_py[0]} hist={r_py[1]}")
    if _kernels is None:
        print("cython  not built")
        return
    t_cy, r_cy = timed(lambda: _kernels.scan(n, 0, total, 3), args.repeat)
    print(f"cython  {t_cy:9.3f} s  {total / t_cy:12.0f} masks/s  connected={r_cy[0]} hist={r_cy[1]}")
    if r_cy != r_py:
        raise SystemExit("kernels disagree")
    print(f"speedup {t_py / t_cy:.1f}x, results identical")


if __name__ == "__main__":
    main()
