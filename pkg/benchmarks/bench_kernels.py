"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import itertools
import timeit

import numpy as np

from agfuzzy import _kernels_py
from agfuzzy.algebra import permutations_array

try:
    from agfuzzy import _ckernels
except ImportError:
    _ckernels = None


def cases():
    T = np.array([[0, 1, 2, 3], [3, 0, 1, 2], [2, 3, 0, 1], [1, 2, 3, 0]])
    grades = np.array(list(itertools.product(range(3), repeat=4)), dtype=np.uint8)
    flat3 = _kernels_py.ag_search(3)
    perms = permutations_array(3)
    return [
        ("product_table n=4 k=2", lambda m: m.product_table(T, grades, 3)),
        ("ag_search n=3", lambda m: m.ag_search(3)),
        ("ag_search n=4", lambda m: m.ag_search(4)),
        ("canonical_forms n=3", lambda m: m.canonical_forms(flat3, perms)),
    ]


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    backends = [("python", _kernels_py)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{'kernel':<24}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for label, fn in cases():
        times = [min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat)) for _, mod in backends]
        speed = f"{times[0] / times[1]:>9.1f}x" if len(times) == 2 else ""
        print(f"{label:<24}" + "".join(f"{t:>11.4f}s" for t in times) + speed)


if __name__ == "__main__":
    main()
