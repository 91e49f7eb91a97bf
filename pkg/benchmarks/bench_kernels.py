"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--n 10]

Each row reports the best of ``--repeat`` runs per backend and checks that
both backends returned the same result.
"""
import argparse
import sys
import timeit

import numpy as np

from nonassoc._kernels import _pykernels

try:
    from nonassoc._kernels import _ckernels
except ImportError:
    _ckernels = None


def cases(n):
    ld, _ = _pykernels.depth_tables(n)
    small, _ = _pykernels.depth_tables(min(n, 7))
    return [
        (f"depth_tables({n})", lambda m: m.depth_tables(n)),
        (f"reduce_table(T_{n}, 2, 3)", lambda m: m.reduce_table(ld, 2, 3)),
        (f"pairwise_equivalent(T_{min(n, 7)}, 2, 2)", lambda m: m.pairwise_equivalent(small, 2, 2)),
        (f"dyck_height_histogram({n + 2})", lambda m: m.dyck_height_histogram(n + 2)),
        (f"dyck_avoiding_count({n + 2}, 2, 2)", lambda m: m.dyck_avoiding_count(n + 2, 2, 2)),
        ("lis_histogram_132(9)", lambda m: m.lis_histogram_132(9)),
    ]


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--n", type=int, default=10, help="tree size for the depth-table kernels")
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels are not built; nothing to compare", file=sys.stderr)
        return 1

    print(f"{'kernel':<36}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, call in cases(args.n):
        if not same(call(_pykernels), call(_ckernels)):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        py = min(timeit.repeat(lambda: call(_pykernels), number=1, repeat=args.repeat))
        cy = min(timeit.repeat(lambda: call(_ckernels), number=1, repeat=args.repeat))
        print(f"{name:<36}{py:>12.4f}{cy:>12.4f}{py / cy:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
