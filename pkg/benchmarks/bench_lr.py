#!/usr/bin/env python3
"""Side-by-side benchmark of the LR enumerator: numba JIT vs pure Python.

Runs the same product and skew workloads through ``lr_fillings`` (compiled)
and ``lr_fillings_py`` (interpreted) and checks that the tallies agree.

    python benchmarks/bench_lr.py [--max-weight 8] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from charhopf import _kernels
from charhopf.partitions import partitions_of


def workload(max_weight: int):
    half = max_weight // 2
    pairs = [(mu, nu) for a in range(1, half + 1) for mu in partitions_of(a)
             for b in range(1, max_weight - a + 1) for nu in partitions_of(b)]
    return pairs


def run(kernel, pairs):
    out = []
    for mu, nu in pairs:
        prod = _kernels.tally(_kernels.product_shapes(mu, nu, kernel))
        out.append(prod)
        for lam in list(prod)[:3]:
            out.append(_kernels.tally(_kernels.skew_contents(lam, mu, kernel)))
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-weight", type=int, default=8)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if not _kernels.USE_NUMBA:
        print("CHARHOPF_DISABLE_NUMBA is set; both columns run the pure kernel")

    t0 = time.perf_counter()
    run(_kernels.lr_fillings, [((1,), (1,))])
    print(f"JIT warmup: {time.perf_counter() - t0:.2f}s\n")

    print(f"{'weight':>6}  {'pairs':>6}  {'python (s)':>10}  {'numba (s)':>10}  {'speedup':>8}  {'agree':>5}")
    print("-" * 56)
    for w in range(4, args.max_weight + 1, 2):
        pairs = workload(w)
        best_py = best_nb = float("inf")
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            ref = run(_kernels.lr_fillings_py, pairs)
            best_py = min(best_py, time.perf_counter() - t0)
            t0 = time.perf_counter()
            got = run(_kernels.lr_fillings, pairs)
            best_nb = min(best_nb, time.perf_counter() - t0)
        agree = "yes" if ref == got else "NO"
        print(f"{w:>6}  {len(pairs):>6}  {best_py:>10.4f}  {best_nb:>10.4f}  {best_py / best_nb:>7.1f}x  {agree:>5}")


if __name__ == "__main__":
    main()
