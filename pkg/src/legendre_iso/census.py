"""Class counts of Legendre curves over F_q: brute force against closed forms.

The enumeration runs on integer-encoded lookup tables.  For each lambda the
only possible partners are its six orbit expressions (isomorphic curves share
j), and an orbit edge is kept when the twist factor it needs is a square.
Classes are the connected components of those edges.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Iterable, Iterator

import numpy as np

from . import _kernels
from .gf import FieldError, FieldSpec, FieldTables, field_of_order, prime_power

__all__ = [
    "ClassPartition",
    "HStratification",
    "CensusReport",
    "orbit_table",
    "partition_classes",
    "count_fqbar_classes",
    "j_values",
    "h_stratify",
    "expected_Nq",
    "expected_fqbar",
    "expected_h_counts",
    "run_census",
    "admissible_q",
    "sweep",
]


@dataclass(frozen=True)
class ClassPartition:
    """F_q-isomorphism classes as sorted tuples of lambda encodings."""

    q: int
    classes: tuple[tuple[int, ...], ...]

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self, lam: int) -> tuple[int, ...]:
        for c in self.classes:
            if lam in c:
                return c
        raise KeyError(lam)


@dataclass(frozen=True)
class HStratification:
    """lambda split by (jacobi(lambda), jacobi(1 - lambda)) for q = 1 mod 4."""

    h1: frozenset[int]
    h2: frozenset[int]
    h3: frozenset[int]
    h4: frozenset[int]

    @property
    def sizes(self) -> tuple[int, int, int, int]:
        return (len(self.h1), len(self.h2), len(self.h3), len(self.h4))

    def stratum(self, lam: int) -> int:
        for i, h in enumerate((self.h1, self.h2, self.h3, self.h4), start=1):
            if lam in h:
                return i
        raise KeyError(lam)


def _lambdas(q: int) -> np.ndarray:
    return np.arange(2, q, dtype=np.int64)


def orbit_table(T: FieldTables) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Orbit expressions and the twist factor u^2 each one requires.

    Returns ``(lam, exprs, u2)`` with ``exprs`` and ``u2`` of shape (6, q-2),
    rows ordered lambda, 1-lambda, 1/lambda, (lambda-1)/lambda, 1/(1-lambda),
    lambda/(lambda-1).
    """
    lam = _lambdas(T.q)
    om = T.plus_one[T.neg[lam]]
    lm1 = T.neg[om]
    exprs = np.stack([
        lam,
        om,
        T.inv[lam],
        T.mul(lm1, T.inv[lam]),
        T.inv[om],
        T.mul(lam, T.inv[lm1]),
    ])
    one = np.ones_like(lam)
    u2 = np.stack([one, T.neg[one], lam, T.neg[lam], lm1, om])
    return lam, exprs, u2


def partition_classes(spec: FieldSpec) -> ClassPartition:
    T = spec.tables
    lam, exprs, u2 = orbit_table(T)
    keep = T.jac[u2] == 1
    src = np.broadcast_to(lam, exprs.shape)[keep]
    dst = exprs[keep]
    labels = _kernels.component_labels(T.q, src, dst)[lam]
    order = np.lexsort((lam, labels))
    lam, labels = lam[order], labels[order]
    cuts = np.flatnonzero(np.diff(labels)) + 1
    classes = tuple(tuple(int(x) for x in c) for c in np.split(lam, cuts))
    return ClassPartition(T.q, classes)


def j_values(spec: FieldSpec) -> np.ndarray:
    """j(E_lambda) for lambda = 2, ..., q-1 (encodings)."""
    T = spec.tables
    lam = _lambdas(T.q)
    lm1 = T.neg[T.plus_one[T.neg[lam]]]
    t = T.plus_one[T.mul(lam, lm1)]
    num = T.mul(T.code(256), T.mul(t, T.mul(t, t)))
    den = T.mul(T.mul(lam, lam), T.mul(lm1, lm1))
    return T.mul(num, T.inv[den])


def count_fqbar_classes(spec: FieldSpec) -> int:
    return int(np.unique(j_values(spec)).size)


def h_stratify(spec: FieldSpec) -> HStratification:
    if spec.q % 4 != 1:
        raise FieldError(f"H-stratification needs q = 1 mod 4, got q = {spec.q}")
    T = spec.tables
    lam = _lambdas(T.q)
    s = T.jac[lam]
    t = T.jac[T.plus_one[T.neg[lam]]]
    pick = lambda a, b: frozenset(int(x) for x in lam[(s == a) & (t == b)])  # noqa: E731
    return HStratification(pick(1, 1), pick(1, -1), pick(-1, 1), pick(-1, -1))


def _check_q(q: int) -> None:
    pk = prime_power(q)
    if pk is None or pk[0] <= 3:
        raise FieldError(f"q = {q} is not a prime power with characteristic > 3")


def _exact(num: int, den: int) -> int:
    value, rem = divmod(num, den)
    if rem:
        raise AssertionError(f"non-integral count {num}/{den}")
    return value


def expected_Nq(q: int) -> int:
    """Closed-form number of F_q-isomorphism classes of Legendre curves."""
    _check_q(q)
    m = q % 24
    if m == 1:
        return _exact(7 * q + 17, 24)
    if m == 5:
        return _exact(7 * q + 13, 24)
    if m in (7, 19):
        return _exact(q + 2, 3)
    if m in (11, 23):
        return _exact(q - 2, 3)
    if m == 13:
        return _exact(7 * q + 29, 24)
    if m == 17:
        return _exact(7 * q + 1, 24)
    raise AssertionError(f"q = {q} has impossible residue {m} mod 24")


def expected_fqbar(q: int) -> int:
    """Number of distinct j-invariants among Legendre curves over F_q."""
    _check_q(q)
    if q % 12 in (1, 7):
        return _exact(q + 5, 6)
    return _exact(q + 1, 6)


def expected_h_counts(q: int) -> tuple[int, int, int]:
    """Class counts inside H1, H2 u H3 and H4."""
    _check_q(q)
    m = q % 24
    if q % 4 != 1:
        raise FieldError(f"stratum counts need q = 1 mod 4, got q = {q}")
    h1 = {1: (q + 23, 24), 5: (q - 5, 24), 13: (q + 11, 24), 17: (q + 7, 24)}[m]
    if m in (1, 17):
        h23, h4 = (q - 1, 8), (q - 1, 8)
    else:
        h23, h4 = (q + 3, 8), (q + 3, 8)
    return _exact(*h1), _exact(*h23), _exact(*h4)


def expected_h_sizes(q: int) -> tuple[int, int, int, int]:
    return (_exact(q - 5, 4),) + (_exact(q - 1, 4),) * 3


@dataclass
class CensusReport:
    q: int
    p: int
    k: int
    q_mod_24: int
    observed_Nq: int
    expected_Nq: int
    observed_fqbar: int
    expected_fqbar: int
    observed_h_sizes: tuple[int, int, int, int] | None = None
    expected_h_sizes: tuple[int, int, int, int] | None = None
    observed_h_counts: tuple[int, int, int] | None = None
    expected_h_counts: tuple[int, int, int] | None = None
    representatives: tuple[int, ...] = field(default=(), repr=False)

    @property
    def all_match(self) -> bool:
        ok = self.observed_Nq == self.expected_Nq and self.observed_fqbar == self.expected_fqbar
        if self.expected_h_sizes is not None:
            ok = ok and self.observed_h_sizes == self.expected_h_sizes
            ok = ok and self.observed_h_counts == self.expected_h_counts
            ok = ok and sum(self.observed_h_counts) == self.observed_Nq
        return ok

    def as_dict(self) -> dict:
        d = asdict(self)
        d["all_match"] = self.all_match
        return d


def stratum_class_counts(partition: ClassPartition, strata: HStratification) -> tuple[int, int, int]:
    """Classes per group (H1, H2 u H3, H4); a class spanning groups is an error."""
    group = {}
    for i, h in enumerate((strata.h1, strata.h2, strata.h3, strata.h4), start=1):
        g = {1: 0, 2: 1, 3: 1, 4: 2}[i]
        group.update(dict.fromkeys(h, g))
    counts = [0, 0, 0]
    for c in partition.classes:
        gs = {group[lam] for lam in c}
        if len(gs) != 1:
            raise AssertionError(f"class {c} straddles strata over F_{partition.q}")
        counts[gs.pop()] += 1
    return tuple(counts)


def run_census(spec: FieldSpec) -> CensusReport:
    q = spec.q
    partition = partition_classes(spec)
    report = CensusReport(
        q=q,
        p=spec.p,
        k=spec.k,
        q_mod_24=q % 24,
        observed_Nq=len(partition),
        expected_Nq=expected_Nq(q),
        observed_fqbar=count_fqbar_classes(spec),
        expected_fqbar=expected_fqbar(q),
        representatives=partition.representatives,
    )
    if q % 4 == 1:
        strata = h_stratify(spec)
        report.observed_h_sizes = strata.sizes
        report.expected_h_sizes = expected_h_sizes(q)
        report.observed_h_counts = stratum_class_counts(partition, strata)
        report.expected_h_counts = expected_h_counts(q)
    return report


def admissible_q(q_min: int, q_max: int) -> list[int]:
    """Prime powers in [q_min, q_max] with characteristic > 3, ascending."""
    out = []
    for q in range(max(q_min, 5), q_max + 1):
        pk = prime_power(q)
        if pk is not None and pk[0] > 3:
            out.append(q)
    return out


def sweep(q_values: Iterable[int]) -> Iterator[CensusReport]:
    for q in sorted(q_values):
        yield run_census(field_of_order(q))
