"""Weierstrass and Legendre curves, their invariants, and the lambda-orbit."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gf import FieldElement, FieldError, FieldSpec

__all__ = [
    "INFINITY",
    "SingularCurveError",
    "WeierstrassCurve",
    "LegendreCurve",
    "TwoParamCurve",
    "b_quantities",
    "discriminant",
    "j_invariant",
    "to_weierstrass",
    "j_legendre",
    "lambda_orbit",
    "orbit_expressions",
    "two_torsion",
]


class SingularCurveError(ValueError):
    pass


class _Infinity:
    __slots__ = ()

    def __repr__(self) -> str:
        return "O"


INFINITY = _Infinity()


def _same_field(owner: FieldSpec, *values: FieldElement) -> None:
    for v in values:
        if v.owner is not owner and v.owner != owner:
            raise FieldError(f"coefficient {v!r} is not in {owner!r}")


@dataclass(frozen=True)
class WeierstrassCurve:
    """Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6.

    Raw construction allows singular curves; use :meth:`elliptic` when the
    curve must be nonsingular.
    """

    owner: FieldSpec
    a1: FieldElement
    a2: FieldElement
    a3: FieldElement
    a4: FieldElement
    a6: FieldElement

    def __post_init__(self) -> None:
        _same_field(self.owner, self.a1, self.a2, self.a3, self.a4, self.a6)

    @classmethod
    def from_ints(cls, owner: FieldSpec, a1=0, a2=0, a3=0, a4=0, a6=0) -> WeierstrassCurve:
        return cls(owner, *(v if isinstance(v, FieldElement) else owner(v) for v in (a1, a2, a3, a4, a6)))

    @classmethod
    def elliptic(cls, owner, a1, a2, a3, a4, a6) -> WeierstrassCurve:
        W = cls(owner, a1, a2, a3, a4, a6)
        if not discriminant(W):
            raise SingularCurveError(f"{W} is singular")
        return W

    @property
    def coefficients(self) -> tuple[FieldElement, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def is_short(self) -> bool:
        return not self.a1 and not self.a3


@dataclass(frozen=True)
class TwoParamCurve:
    """y^2 = x(x - a)(x - b) with ab(a - b) != 0."""

    owner: FieldSpec
    a: FieldElement
    b: FieldElement

    def __post_init__(self) -> None:
        _same_field(self.owner, self.a, self.b)
        if not (self.a * self.b * (self.a - self.b)):
            raise SingularCurveError(f"ab(a-b) = 0 for a={self.a}, b={self.b}")

    @property
    def roots(self) -> tuple[FieldElement, FieldElement]:
        return (self.a, self.b)


@dataclass(frozen=True)
class LegendreCurve:
    """E_lambda : y^2 = x(x - 1)(x - lambda), lambda not in {0, 1}."""

    owner: FieldSpec
    lam: FieldElement

    def __post_init__(self) -> None:
        _same_field(self.owner, self.lam)
        if not self.lam or self.lam == 1:
            raise SingularCurveError(f"lambda = {self.lam} gives a singular curve")

    @classmethod
    def of(cls, lam: FieldElement) -> LegendreCurve:
        return cls(lam.owner, lam)

    @property
    def roots(self) -> tuple[FieldElement, FieldElement]:
        return (self.owner.one, self.lam)

    def as_two_param(self) -> TwoParamCurve:
        return TwoParamCurve(self.owner, self.owner.one, self.lam)


def b_quantities(W: WeierstrassCurve):
    a1, a2, a3, a4, a6 = W.coefficients
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 - a1 * a3 * a4 + 4 * a2 * a6 + a2 * a3 * a3 - a4 * a4
    return b2, b4, b6, b8


def discriminant(W: WeierstrassCurve) -> FieldElement:
    b2, b4, b6, b8 = b_quantities(W)
    return -(b2 * b2 * b8) - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6


def j_invariant(W: WeierstrassCurve) -> FieldElement:
    delta = discriminant(W)
    if not delta:
        raise SingularCurveError("j-invariant of a singular curve")
    b2, b4, _, _ = b_quantities(W)
    return (b2 * b2 - 24 * b4) ** 3 / delta


def to_weierstrass(C: LegendreCurve | TwoParamCurve) -> WeierstrassCurve:
    """Expand x(x - a)(x - b) = x^3 - (a + b) x^2 + ab x."""
    a, b = C.roots
    zero = C.owner.zero
    return WeierstrassCurve(C.owner, zero, -(a + b), zero, a * b, zero)


def j_legendre(L: LegendreCurve) -> FieldElement:
    lam = L.lam
    return 256 * (lam * lam - lam + 1) ** 3 / (lam * lam * (lam - 1) ** 2)


@lru_cache(maxsize=1 << 16)
def orbit_expressions(lam: FieldElement) -> tuple[FieldElement, ...]:
    """lambda, 1-lambda, 1/lambda, (lambda-1)/lambda, 1/(1-lambda), lambda/(lambda-1).

    This row order matches the twist table used by ``iso.table1_fast_iso``.
    """
    one_minus = 1 - lam
    return (
        lam,
        one_minus,
        1 / lam,
        (lam - 1) / lam,
        1 / one_minus,
        lam / (lam - 1),
    )


def lambda_orbit(L: LegendreCurve) -> tuple[FieldElement, ...]:
    """Distinct values of the six orbit expressions, canonically sorted."""
    return tuple(sorted(set(orbit_expressions(L.lam))))


def two_torsion(L: LegendreCurve):
    zero = L.owner.zero
    return (INFINITY, (zero, zero), (L.owner.one, zero), (L.lam, zero))
