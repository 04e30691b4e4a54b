"""F_q-isomorphism of Weierstrass, two-parameter and Legendre curves.

Three independent routes decide whether two Legendre curves are isomorphic:

* ``simplified_iso_witness`` scans every (u, r) in F_q* x F_q against the
  short-form change-of-variables equations (the ground truth);
* ``lemma31_iso`` / ``corollary32_iso`` match the root sets {d, e} against the
  three scaled candidate sets;
* ``table1_fast_iso`` looks up which twist factor u^2 each orbit expression
  needs and checks it is a square.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

from .curves import LegendreCurve, TwoParamCurve, WeierstrassCurve, orbit_expressions, to_weierstrass
from .gf import FieldElement, FieldError, jacobi, sqrt

__all__ = [
    "TransformParams",
    "IsoWitness",
    "CASES",
    "apply_transform",
    "simplified_iso_witness",
    "general_iso_witness",
    "lemma31_iso",
    "corollary32_iso",
    "table1_fast_iso",
    "table1_u2",
]

MatchedCase = Literal["identity-set", "negated-set", "swapped-set"]
CASES: tuple[MatchedCase, ...] = ("identity-set", "negated-set", "swapped-set")


@dataclass(frozen=True)
class TransformParams:
    """(X, Y) -> (u^2 X + r, u^3 Y + u^2 s X + t), u != 0."""

    u: FieldElement
    r: FieldElement
    s: FieldElement
    t: FieldElement

    def __post_init__(self) -> None:
        if not self.u:
            raise ValueError("u must be nonzero")

    @classmethod
    def short(cls, u: FieldElement, r: FieldElement) -> TransformParams:
        zero = u.owner.zero
        return cls(u, r, zero, zero)


@dataclass(frozen=True)
class IsoWitness:
    isomorphic: bool
    params: TransformParams | None = None
    matched_case: MatchedCase | None = None

    def __post_init__(self) -> None:
        if self.isomorphic != (self.params is not None):
            raise ValueError("params must be present exactly when isomorphic")

    def __bool__(self) -> bool:
        return self.isomorphic


NOT_ISOMORPHIC = IsoWitness(False)


def apply_transform(W: WeierstrassCurve, T: TransformParams) -> WeierstrassCurve:
    """Coefficients of the image curve under the change of variables T."""
    a1, a2, a3, a4, a6 = W.coefficients
    u, r, s, t = T.u, T.r, T.s, T.t
    if not u:
        raise ValueError("u must be nonzero")
    ui = 1 / u
    ui2 = ui * ui
    ui3 = ui2 * ui
    ui4 = ui2 * ui2
    return WeierstrassCurve(
        W.owner,
        (a1 + 2 * s) * ui,
        (a2 - s * a1 + 3 * r - s * s) * ui2,
        (a3 + r * a1 + 2 * t) * ui3,
        (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) * ui4,
        (a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1) * ui4 * ui2,
    )


def _case_for_r(r: FieldElement, roots) -> MatchedCase | None:
    if not r:
        return "identity-set"
    if r == roots[0]:
        return "negated-set"
    if r == roots[1]:
        return "swapped-set"
    return None


def simplified_iso_witness(
    C1: LegendreCurve | TwoParamCurve,
    C2: LegendreCurve | TwoParamCurve,
    r_values: Iterable[FieldElement] | None = None,
) -> IsoWitness:
    """First (u, r), u ascending then r ascending, solving

        u^2 a2' = a2 + 3r
        u^4 a4' = a4 + 2r a2 + 3r^2
        u^6 a6' = a6 + r a4 + r^2 a2 + r^3

    where the primed coefficients belong to C2.  ``r_values`` restricts the
    r-scan (e.g. to the roots {0, a, b}); by default every r in F_q is tried.
    """
    if C1.owner != C2.owner:
        raise FieldError("curves over different fields")
    F = C1.owner
    W1, W2 = to_weierstrass(C1), to_weierstrass(C2)
    a2, a4, a6 = W1.a2, W1.a4, W1.a6
    b2, b4, b6 = W2.a2, W2.a4, W2.a6
    rs = sorted(F.elements()) if r_values is None else sorted(set(r_values))
    # per-r right-hand sides do not depend on u
    rhs = [(r, a2 + 3 * r, a4 + 2 * r * a2 + 3 * r * r, a6 + r * a4 + r * r * a2 + r**3) for r in rs]
    for u in F.elements():
        if not u:
            continue
        u2 = u * u
        u4 = u2 * u2
        l2, l4, l6 = u2 * b2, u4 * b4, u4 * u2 * b6
        for r, e2, e4, e6 in rhs:
            if l2 == e2 and l4 == e4 and l6 == e6:
                return IsoWitness(True, TransformParams.short(u, r), _case_for_r(r, C1.roots))
    return NOT_ISOMORPHIC


def general_iso_witness(W1: WeierstrassCurve, W2: WeierstrassCurve) -> IsoWitness:
    """Exhaustive (u, r, s, t) scan; O(q^4), for tiny fields only."""
    if W1.owner != W2.owner:
        raise FieldError("curves over different fields")
    F = W1.owner
    els = list(F.elements())
    target = W2.coefficients
    for u in els[1:]:
        for r in els:
            for s in els:
                for t in els:
                    T = TransformParams(u, r, s, t)
                    if apply_transform(W1, T).coefficients == target:
                        return IsoWitness(True, T)
    return NOT_ISOMORPHIC


def lemma31_iso(C1: TwoParamCurve, C2: TwoParamCurve) -> IsoWitness:
    """Is {d, e} one of {a, b}/u^2, {-a, b-a}/u^2, {a-b, -b}/u^2 for some u?

    Both matchings of each candidate pair onto (d, e) are tried; the witness
    uses r = 0, a, b for the three cases respectively.
    """
    if C1.owner != C2.owner:
        raise FieldError("curves over different fields")
    a, b = C1.a, C1.b
    d, e = C2.a, C2.b
    candidates = ((a, b, C1.owner.zero), (-a, b - a, a), (a - b, -b, b))
    for case, (A, B, r) in zip(CASES, candidates):
        for x, y in ((d, e), (e, d)):
            # A/x == B/y without dividing; x, y are nonzero
            if A * y != B * x:
                continue
            u2 = A / x
            if jacobi(u2) == 1:
                return IsoWitness(True, TransformParams.short(sqrt(u2), r), case)
    return NOT_ISOMORPHIC


def corollary32_iso(E1: LegendreCurve, E2: LegendreCurve) -> IsoWitness:
    if E1.owner != E2.owner:
        raise FieldError("curves over different fields")
    return lemma31_iso(E1.as_two_param(), E2.as_two_param())


def table1_u2(lam: FieldElement) -> tuple[FieldElement, ...]:
    """u^2 needed for each of ``orbit_expressions(lam)``, row for row."""
    return (lam.owner.one, -lam.owner.one, lam, -lam, lam - 1, 1 - lam)


def table1_fast_iso(L: LegendreCurve, mu: FieldElement) -> bool:
    """E_lambda ~ E_mu iff some orbit expression equal to mu has a square u^2.

    Rows are OR-ed because expressions coincide on degenerate orbits.
    """
    if mu.owner != L.owner:
        raise FieldError("mu is not in the curve's field")
    return any(
        expr == mu and jacobi(u2) == 1
        for expr, u2 in zip(orbit_expressions(L.lam), table1_u2(L.lam))
    )
