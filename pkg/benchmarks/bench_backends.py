"""Benchmark the compiled kernels against the pure-Python twins.

Times the two sweep inner loops: the crystal involution (strip a residue
path, negate, replay) over all e-regular partitions up to a rank, and
iterated beta-set steps over all partitions up to a rank.

Usage:
    python benchmarks/bench_backends.py [--max-n 16] [--e 2,3] [--k 9] [--repeat 3]
"""

import argparse
import time

from mullineux._core import _pykernels

try:
    from mullineux._core import _ckernels
except ImportError:
    _ckernels = None

from mullineux.partitions import beta_set, enumerate_e_regular, enumerate_partitions


def bench_mullineux(backend, e_list, max_n):
    count = 0
    t0 = time.perf_counter()
    for e in e_list:
        for n in range(max_n + 1):
            for lam in enumerate_e_regular(n, e):
                backend.mullineux(lam, e)
                count += 1
    return time.perf_counter() - t0, count


def bench_towers(backend, e_list, max_n, k_max):
    count = 0
    t0 = time.perf_counter()
    for e in e_list:
        for n in range(max_n + 1):
            for lam in enumerate_partitions(n):
                x = beta_set(lam, max(1, len(lam)))
                pair = (x, x)
                for _ in range(k_max + 1):
                    pair = backend.psi_step(e, *pair)
                count += 1
    return time.perf_counter() - t0, count


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=16)
    parser.add_argument("--e", default="2,3")
    parser.add_argument("--k", type=int, default=9)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    e_list = [int(x) for x in args.e.split(",")]

    backends = [("pure", _pykernels)]
    if _ckernels is not None:
        backends.append(("compiled", _ckernels))
    else:
        print("compiled backend not built; timing pure only")

    results = {}
    for name, backend in backends:
        t, count = min(
            (bench_mullineux(backend, e_list, args.max_n) for _ in range(args.repeat)),
            key=lambda r: r[0],
        )
        results[("mullineux", name)] = (t, count)
        t, count = min(
            (bench_towers(backend, e_list, args.max_n, args.k) for _ in range(args.repeat)),
            key=lambda r: r[0],
        )
        results[("towers", name)] = (t, count)

    print(f"{'kernel':<12} {'backend':<10} {'cases':>8} {'seconds':>10} {'us/case':>10}")
    for (kernel, name), (t, count) in results.items():
        print(f"{kernel:<12} {name:<10} {count:>8} {t:>10.4f} {1e6 * t / count:>10.1f}")
    if _ckernels is not None:
        for kernel in ("mullineux", "towers"):
            pure_t = results[(kernel, "pure")][0]
            comp_t = results[(kernel, "compiled")][0]
            print(f"{kernel}: compiled is {pure_t / comp_t:.1f}x faster")


if __name__ == "__main__":
    main()
