"""Exit criteria; each test records one PASS/FAIL line in the terminal summary."""

import time

import numpy as np
import pytest
import sympy

from legendre_iso.census import (
    admissible_q,
    expected_fqbar,
    expected_h_counts,
    expected_h_sizes,
    expected_Nq,
    h_stratify,
    partition_classes,
    run_census,
    stratum_class_counts,
)
from legendre_iso.curves import LegendreCurve, discriminant, j_invariant, j_legendre, to_weierstrass
from legendre_iso.gf import elements, field_of_order
from legendre_iso.iso import corollary32_iso, table1_fast_iso

from conftest import ACCEPTANCE_LINES, iso_relation

Q_MAX = 2000
SMALL_Q_MAX = 200
PRIME_POWERS = {
    p**k for p in sympy.primerange(5, 50) for k in range(2, 12) if p**k <= Q_MAX
}


def record(n, title, ok, detail=""):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {n}. {title}" + (f": {detail}" if detail else ""))
    assert ok, detail


@pytest.fixture(scope="module")
def reports():
    t0 = time.perf_counter()
    out = [run_census(field_of_order(q)) for q in admissible_q(5, Q_MAX)]
    return out, time.perf_counter() - t0


def test_1_total_count_formula(reports):
    reps, elapsed = reports
    qs = {r.q for r in reps}
    primes = set(sympy.primerange(5, Q_MAX + 1))
    assert qs == primes | PRIME_POWERS
    bad = [r.q for r in reps if r.observed_Nq != r.expected_Nq]
    record(1, "N_q brute force == closed form, all q in [5, 2000]",
           not bad and elapsed < 60,
           f"{len(reps)} fields ({len(primes)} primes + {len(PRIME_POWERS)} prime powers), "
           f"{len(bad)} mismatches {bad[:5]}, {elapsed:.1f}s")


def test_2_spot_values():
    want = {7: 3, 11: 3, 13: 5, 17: 5, 25: 8, 49: 15}
    got = {q: (len(partition_classes(field_of_order(q))), expected_Nq(q)) for q in want}
    ok = all(got[q] == (n, n) for q, n in want.items())
    record(2, "spot values N_7..N_49", ok, ", ".join(f"N_{q}={o}/{e}" for q, (o, e) in got.items()))


def test_3_fqbar_counts(reports):
    reps, _ = reports
    bad = []
    for r in reps:
        want = (r.q + 5) // 6 if r.q % 12 in (1, 7) else (r.q + 1) // 6
        if not (r.observed_fqbar == r.expected_fqbar == want):
            bad.append(r.q)
    record(3, "algebraic-closure class counts", not bad, f"{len(reps)} fields, mismatches {bad[:5]}")


def test_4_h_sizes(reports):
    reps, _ = reports
    mod1 = [r for r in reps if r.q % 4 == 1]
    bad = [r.q for r in mod1
           if r.observed_h_sizes != ((r.q - 5) // 4, (r.q - 1) // 4, (r.q - 1) // 4, (r.q - 1) // 4)
           or r.observed_h_sizes != expected_h_sizes(r.q)]
    record(4, "|H1| = (q-5)/4, |H2| = |H3| = |H4| = (q-1)/4", not bad, f"{len(mod1)} fields, mismatches {bad[:5]}")


def test_5_stratum_class_counts(reports):
    reps, _ = reports
    mod1 = [r for r in reps if r.q % 4 == 1]
    bad = [r.q for r in mod1
           if r.observed_h_counts != expected_h_counts(r.q) or sum(r.observed_h_counts) != r.observed_Nq]
    record(5, "per-stratum class counts and their sum", not bad, f"{len(mod1)} fields, mismatches {bad[:5]}")


def test_6_oracle_equivalence():
    pairs = 0
    bad = []
    for q in admissible_q(5, SMALL_Q_MAX):
        F = field_of_order(q)
        wu, _ = iso_relation(q)
        wu_restricted, _ = iso_relation(q, True)
        oracle = wu[2:, 2:] >= 0
        if not np.array_equal(oracle, wu_restricted[2:, 2:] >= 0):
            bad.append((q, "restricted r"))
        curves = [LegendreCurve(F, lam) for lam in elements(F)[2:]]
        for i, E1 in enumerate(curves):
            for j, E2 in enumerate(curves):
                crit = corollary32_iso(E1, E2).isomorphic
                fast = table1_fast_iso(E1, E2.lam)
                if not (crit == fast == oracle[i, j]):
                    bad.append((q, int(E1.lam), int(E2.lam)))
                pairs += 1
    record(6, "table lookup == root-set criterion == (u, r) scan; restricted r == full r",
           not bad, f"{pairs} pairs over q <= {SMALL_Q_MAX}, disagreements {bad[:5]}")


def test_7_algebraic_identities():
    checked = 0
    bad = []
    for q in admissible_q(5, SMALL_Q_MAX):
        F = field_of_order(q)
        for lam in elements(F)[2:]:
            L = LegendreCurve(F, lam)
            W = to_weierstrass(L)
            if j_legendre(L) != j_invariant(W) or discriminant(W) != 16 * lam**2 * (lam - 1) ** 2:
                bad.append((q, int(lam)))
            checked += 1
    record(7, "j formula == j via b-quantities; discriminant == 16 l^2 (l-1)^2", not bad,
           f"{checked} curves, failures {bad[:5]}")


def test_8_structural_properties():
    problems = []
    for q in admissible_q(5, SMALL_Q_MAX):
        F = field_of_order(q)
        T = F.tables
        wu, _ = iso_relation(q)
        R = wu[2:, 2:] >= 0
        n = R.shape[0]
        Ri = R.astype(np.int64)
        if not (R.diagonal().all() and np.array_equal(R, R.T) and not ((Ri @ Ri > 0) & ~R).any()):
            problems.append((q, "not an equivalence relation"))
        P = partition_classes(F)
        labels = np.empty(n, dtype=np.int64)
        for k, c in enumerate(P.classes):
            labels[np.asarray(c) - 2] = k
        if not np.array_equal(R, labels[:, None] == labels[None, :]):
            problems.append((q, "partition differs from oracle relation"))
        js = {c: {j_legendre(LegendreCurve(F, F.decode(x))) for x in c} for c in P.classes}
        generic = [c for c in P.classes if js[c].isdisjoint({F(0), F(1728)})]
        if q % 4 == 3:
            if any(len(c) != 3 for c in generic):
                problems.append((q, "generic class size != 3"))
        else:
            H = h_stratify(F)
            try:
                stratum_class_counts(P, H)
            except AssertionError:
                problems.append((q, "class straddles strata"))
            for c in P.classes:
                if H.stratum(c[0]) == 4 and set(c) != {c[0], int(T.plus_one[T.neg[c[0]]])}:
                    problems.append((q, f"H4 class {c} is not {{l, 1-l}}"))
                if H.stratum(c[0]) == 1 and c in generic and len(c) != 6:
                    problems.append((q, f"generic H1 class {c} has size {len(c)}"))
    record(8, "equivalence relation; strata closed; H4 = {l, 1-l}; generic 3 mod 4 size 3",
           not problems, f"problems {problems[:5]}")
