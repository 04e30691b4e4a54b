"""Time the numba kernels against their pure-numpy fallbacks.

    python benchmarks/bench_kernels.py            # default sizes
    python benchmarks/bench_kernels.py --quick    # small sizes, smoke run

The numba column excludes compilation (one warm-up call per kernel).
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from legendre_iso import _kernels, census
from legendre_iso.curves import LegendreCurve, to_weierstrass
from legendre_iso.gf import elements, field_of_order


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def iso_case(q):
    T = field_of_order(q).tables
    args = (T.add_table, T.mul_table, T.inv, T.neg, T.code(3), False)
    return f"iso_scan q={q}", "iso_scan", args


def general_case(q):
    F = field_of_order(q)
    T = F.tables
    src = np.array([[int(c) for c in to_weierstrass(LegendreCurve(F, x)).coefficients] for x in elements(F)[2:]])
    return f"general_scan q={q}", "general_scan", (T.add_table, T.mul_table, T.inv, T.neg, T.code(2), T.code(3), src)


def labels_case(q):
    T = field_of_order(q).tables
    lam, exprs, u2 = census.orbit_table(T)
    keep = T.jac[u2] == 1
    src = np.broadcast_to(lam, exprs.shape)[keep].copy()
    return f"component_labels q={q}", "component_labels", (T.q, src, exprs[keep])


def sweep_time(q_max, backend):
    saved = _kernels.component_labels
    _kernels.component_labels = getattr(_kernels, f"component_labels_{backend}")
    try:
        qs = census.admissible_q(5, q_max)
        t0 = time.perf_counter()
        mismatches = sum(not r.all_match for r in census.sweep(qs))
        return time.perf_counter() - t0, len(qs), mismatches
    finally:
        _kernels.component_labels = saved


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if args.quick:
        cases = [iso_case(31), general_case(11), labels_case(997)]
        sweep_max = 300
    else:
        cases = [iso_case(61), iso_case(127), iso_case(199), general_case(13), general_case(23),
                 general_case(31), labels_case(1999), labels_case(1849)]
        sweep_max = 2000

    if not _kernels.HAS_NUMBA:
        print("numba not importable; only the numpy column is meaningful")
    print(f"{'kernel':<28}{'numpy [s]':>12}{'numba [s]':>12}{'speedup':>10}")
    for label, name, kargs in cases:
        t_np = best_of(lambda: getattr(_kernels, f"{name}_numpy")(*kargs), args.repeat)
        if _kernels.HAS_NUMBA:
            nb = getattr(_kernels, f"{name}_numba")
            nb(*kargs)
            t_nb = best_of(lambda: nb(*kargs), args.repeat)
            print(f"{label:<28}{t_np:>12.4f}{t_nb:>12.4f}{t_np / t_nb:>9.1f}x")
        else:
            print(f"{label:<28}{t_np:>12.4f}{'-':>12}{'-':>10}")

    for backend in ["numpy"] + (["numba"] if _kernels.HAS_NUMBA else []):
        elapsed, n, bad = sweep_time(sweep_max, backend)
        print(f"census sweep q<={sweep_max} [{backend}]: {n} fields, {bad} mismatches, {elapsed:.2f}s")


if __name__ == "__main__":
    main()
