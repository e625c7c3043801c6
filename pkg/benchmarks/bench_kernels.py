"""Benchmark the numba kernels against their pure-numpy fallbacks.

Runs each public kernel on identical random inputs through both
implementations, checks that the results agree, and prints a timing table.
The numba path requires numba to import; run with FPIMMUNITY_PURE_NUMPY=1
to confirm the package works without it (this script then benchmarks the
numpy path against itself and says so).

Usage: python benchmarks/bench_kernels.py [--repeat N] [--seed S]
"""

import argparse
import math
import time

import numpy as np

from fpimmunity import _kernels


def _timeit(fn, repeat):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best


def bench_rref(rng, repeat):
    M = rng.randint(0, 5, size=(600, 700)).astype(np.int64)
    np_out, np_t = _timeit(lambda: _kernels._rref_np(M.copy(), 5), repeat)
    if not _kernels.HAVE_NUMBA:
        return "rref 600x700 F5", np_t, None, True
    nb_out, nb_t = _timeit(lambda: _kernels._rref_nb(M.copy(), 5), repeat)
    return "rref 600x700 F5", np_t, nb_t, np_out[0] == nb_out[0]


def bench_scan_block(rng, repeat):
    m = 500
    block = rng.randint(0, 3, size=(m, 400)).astype(np.int64)

    def run(impl):
        E = np.zeros((m, m), dtype=np.int64)
        rho = np.zeros(m, dtype=np.int64)
        return impl(E, rho, 0, block.copy(), 3)

    np_out, np_t = _timeit(lambda: run(_kernels._scan_block_np), repeat)
    if not _kernels.HAVE_NUMBA:
        return "scan_block 500x400 F3", np_t, None, True
    nb_out, nb_t = _timeit(lambda: run(_kernels._scan_block_nb), repeat)
    return "scan_block 500x400 F3", np_t, nb_t, np_out == nb_out


def bench_rank_gf2(rng, repeat):
    M = rng.randint(0, 2, size=(2000, 1500)).astype(np.int64)
    np_out, np_t = _timeit(lambda: _kernels._rank_gf2_packed_np(M), repeat)
    if not _kernels.HAVE_NUMBA:
        return "rank_gf2_packed 2000x1500", np_t, None, True
    nb_out, nb_t = _timeit(lambda: _kernels._rank_gf2_packed_nb(M), repeat)
    return "rank_gf2_packed 2000x1500", np_t, nb_t, np_out == nb_out


def bench_tensor_pairs(rng, repeat):
    def strong_batch(count):
        out = []
        while len(out) < count:
            A = rng.randint(0, 3, size=(3, 3)).astype(np.int64)
            if _kernels.is_strong_fast(A, 3):
                out.append(A)
        return np.array(out, dtype=np.int64)

    As = strong_batch(40)
    Bs = strong_batch(40)
    np_out, np_t = _timeit(lambda: _kernels._tensor_pairs_weak_np(As, Bs, 3),
                           repeat)
    if not _kernels.HAVE_NUMBA:
        return "tensor_pairs_weak 40x40 F3", np_t, None, True
    s = 9
    qs = np.array([q for q in range(1, s) if math.gcd(q, s) == 1],
                  dtype=np.int64)
    nb_out, nb_t = _timeit(
        lambda: tuple(int(x) for x in
                      _kernels._tensor_pairs_weak_nb(As, Bs, qs, 3)), repeat)
    return "tensor_pairs_weak 40x40 F3", np_t, nb_t, tuple(np_out) == nb_out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.RandomState(args.seed)

    if not _kernels.HAVE_NUMBA:
        print("numba path unavailable (FPIMMUNITY_PURE_NUMPY set or numba "
              "missing); timing the numpy path only\n")

    benches = [bench_rref, bench_scan_block, bench_rank_gf2,
               bench_tensor_pairs]
    print(f"{'kernel':<28} {'numpy':>10} {'numba':>10} {'speedup':>8}  agree")
    for bench in benches:
        name, np_t, nb_t, agree = bench(rng, args.repeat)
        if nb_t is None:
            print(f"{name:<28} {np_t * 1e3:>8.1f}ms {'-':>10} {'-':>8}  "
                  f"{'yes' if agree else 'NO'}")
        else:
            print(f"{name:<28} {np_t * 1e3:>8.1f}ms {nb_t * 1e3:>8.1f}ms "
                  f"{np_t / nb_t:>7.1f}x  {'yes' if agree else 'NO'}")
        if not agree:
            raise SystemExit(f"implementations disagree on {name}")


if __name__ == "__main__":
    main()
