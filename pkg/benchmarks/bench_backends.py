"""Compare the numba kernels against the pure numpy fallback.

Usage: python benchmarks/bench_backends.py [--repeat 5]

Each workload is timed on both backends (best of N after a warmup run)
and the outputs are cross-checked for equality.  The same selection is
available at runtime through POSETC_BACKEND=numba|numpy.
"""

import argparse
import time

import numpy as np

from posetc import GenConfig, random_poset
from posetc import _kernels as kernels


def stacked_chains(k):
    """k disjoint 2-chains: 3**k antichains on 2k elements."""
    n = 2 * k
    mat = np.eye(n, dtype=bool)
    for i in range(k):
        mat[2 * i, 2 * i + 1] = True
    return mat


def workloads():
    rng = np.random.default_rng(1)
    dag = np.triu(rng.random((400, 400)) < 0.02, k=1)
    enum_leq = stacked_chains(12)  # 531_441 antichains
    sub_leq = stacked_chains(8)  # 6_561 antichains, 43M order cells
    big = random_poset(GenConfig(64, 0.15, 7)).matrix

    masks = kernels.antichain_bitmasks(sub_leq)
    members = np.zeros((len(masks), sub_leq.shape[0]), dtype=bool)
    for row, mask in enumerate(sorted(masks)):
        for j in range(sub_leq.shape[0]):
            if mask >> j & 1:
                members[row, j] = True

    return [
        ("transitive closure, 400-node DAG", lambda: kernels.transitive_closure(dag)),
        (
            "antichain enumeration, 531k antichains",
            lambda: kernels.antichain_bitmasks(enum_leq),
        ),
        (
            "subset order matrix, 6561 x 6561",
            lambda: kernels.subset_order_matrix(sub_leq, members),
        ),
        ("embedding order, 64 elements", lambda: kernels.cayley_order(big)),
    ]


def best_of(fn, repeat):
    fn()  # warmup (includes JIT compilation on the numba backend)
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def canon(result):
    if isinstance(result, list):
        return sorted(result)
    return np.asarray(result)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = ["numpy"] + (["numba"] if kernels.HAS_NUMBA else [])
    if len(backends) == 1:
        print("numba unavailable: timing the numpy backend only")

    jobs = workloads()
    width = max(len(name) for name, _ in jobs)
    header = f"{'workload'.ljust(width)}  " + "  ".join(f"{b:>10}" for b in backends)
    print(header + ("     speedup" if len(backends) == 2 else ""))
    for name, fn in jobs:
        times = {}
        results = {}
        for backend in backends:
            kernels.set_backend(backend)
            times[backend], results[backend] = best_of(fn, args.repeat)
        line = f"{name.ljust(width)}  " + "  ".join(
            f"{times[b] * 1e3:9.2f}ms" for b in backends
        )
        if len(backends) == 2:
            a, b = canon(results["numpy"]), canon(results["numba"])
            same = a == b if isinstance(a, list) else np.array_equal(a, b)
            assert same, f"backend mismatch on {name}"
            line += f"  {times['numpy'] / times['numba']:9.1f}x"
        print(line)
    kernels.set_backend("auto")


if __name__ == "__main__":
    main()
