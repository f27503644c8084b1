"""Compare the compiled simplex kernel with the numpy fallback.

    python3 benchmarks/bench_simplex.py [--repeat 3]

Each workload runs the same LP sequence through both backends; results are
checked for bit-identical answers before timings are printed.
"""

import argparse
import time

import numpy as np

from chanorder import _kernel
from chanorder.geometry import convex_extreme_points, hausdorff_tv, hull_membership


def membership_batch(kernel, rng, d, k, count=300):
    out = []
    for _ in range(count):
        G = rng.dirichlet(np.ones(d), size=k)
        q = rng.dirichlet(np.ones(d))
        res = hull_membership(q, G, kernel=kernel)
        out.append(res.weights if res.inside else res.separator[0])
    return out


def extreme_batch(kernel, rng, d, k, count=50):
    return [convex_extreme_points(rng.dirichlet(np.ones(d), size=k), kernel=kernel) for _ in range(count)]


def hausdorff_batch(kernel, rng, d, k, count=30):
    return [hausdorff_tv(rng.dirichlet(np.ones(d), size=k), rng.dirichlet(np.ones(d), size=k), kernel=kernel)
            for _ in range(count)]


WORKLOADS = [
    ("membership |Y|=4, 6 gens", membership_batch, 4, 6),
    ("membership |Y|=12, 30 gens", membership_batch, 12, 30),
    ("extreme points |Y|=6, 20 pts", extreme_batch, 6, 20),
    ("hausdorff |Y|=5, 8 pts", hausdorff_batch, 5, 8),
]


def same(a, b):
    if isinstance(a, list):
        return len(a) == len(b) and all(same(x, y) for x, y in zip(a, b))
    return np.array_equal(a, b)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    backends = _kernel.backends()
    if "cython" not in backends:
        print("compiled kernel not built; only the numpy fallback is available")
    print(f"{'workload':32s}" + "".join(f"{name:>12s}" for name in backends) + "   speedup")
    for label, fn, d, k in WORKLOADS:
        best, results = {}, {}
        for name, kernel in backends.items():
            times = []
            for _ in range(args.repeat):
                t = time.perf_counter()
                results[name] = fn(kernel, np.random.default_rng(args.seed), d, k)
                times.append(time.perf_counter() - t)
            best[name] = min(times)
        if "cython" in results and not same(results["python"], results["cython"]):
            raise SystemExit(f"{label}: backends disagree")
        row = f"{label:32s}" + "".join(f"{best[n]:11.3f}s" for n in backends)
        if "cython" in best:
            row += f"   {best['python'] / best['cython']:6.2f}x"
        print(row)


if __name__ == "__main__":
    main()
