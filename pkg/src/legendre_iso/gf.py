"""Finite fields F_q = F_p[x]/(m(x)) with p > 3.

Elements are stored as tuples of k residues mod p, lowest degree first.  At
every external boundary an element is the integer ``sum(c_i * p**i)`` in
``[0, q)``; the canonical total order on elements is the order of these
integers.

``FieldTables`` holds the same field as flat numpy lookup tables over the
integer encoding, which is what the numeric kernels in ``_kernels`` consume.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

import numpy as np

__all__ = [
    "MAX_Q",
    "TABLE_MAX_Q",
    "FieldError",
    "FieldSpec",
    "FieldElement",
    "FieldTables",
    "make_field",
    "elements",
    "jacobi",
    "sqrt",
    "is_prime",
    "prime_power",
    "is_irreducible",
]

# Encodings must fit a signed 64-bit integer so numpy arrays can carry them.
MAX_Q = 2**62
# Largest field for which full lookup tables are built.
TABLE_MAX_Q = 1 << 22


class FieldError(ValueError):
    """Raised for inadmissible fields or invalid field operations."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with ``q == p**k`` and p prime, or None.

    >>> prime_power(49)
    (7, 2)
    >>> prime_power(12) is None
    True
    """
    if q < 2:
        return None
    p = None
    n = q
    d = 2
    while d * d <= n:
        if n % d == 0:
            p = d
            break
        d += 1 if d == 2 else 2
    if p is None:
        return (q, 1)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return (p, k) if n == 1 else None


# -- polynomials over F_p as tuples, lowest degree first, no trailing zeros --

def _trim(c: Sequence[int]) -> tuple[int, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = tuple(a) + (0,) * (n - len(a))
    b = tuple(b) + (0,) * (n - len(b))
    return _trim((x - y) % p for x, y in zip(a, b))


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(v % p for v in out)


def _pmod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    lead_inv = pow(m[-1], -1, p)
    while len(a) - 1 >= dm and a:
        c = a[-1] * lead_inv % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        a = list(_trim(a))
    return tuple(a)


def _pgcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base, e, m, p):
    result = (1,)
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Irreducibility over F_p: no factor of degree <= k/2 divides it.

    Each candidate degree i is ruled out by ``gcd(f, x^(p^i) - x) == 1``.
    """
    f = _trim(modulus)
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = (0, 1)
    h = x
    for _ in range(k // 2):
        h = _ppowmod(h, p, f, p)
        if len(_pgcd(f, _psub(h, x, p), p)) > 1:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """F_q as F_p[x] modulo a monic irreducible ``modulus`` of degree k.

    ``modulus`` lists coefficients lowest degree first, including the leading 1.
    """

    p: int
    k: int
    modulus: tuple[int, ...]
    q: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", self.p**self.k)

    def __repr__(self) -> str:
        if self.k == 1:
            return f"FieldSpec(F_{self.p})"
        return f"FieldSpec(F_{self.q} = F_{self.p}[x]/{self.modulus})"

    def __call__(self, n: int) -> FieldElement:
        """Image of the integer ``n`` under Z -> F_q (i.e. n * 1)."""
        return FieldElement(self, (n % self.p,) + (0,) * (self.k - 1))

    def decode(self, code: int) -> FieldElement:
        """Element whose integer encoding is ``code``."""
        if not 0 <= code < self.q:
            raise FieldError(f"encoding {code} outside [0, {self.q})")
        coeffs = []
        for _ in range(self.k):
            code, c = divmod(code, self.p)
            coeffs.append(c)
        return FieldElement(self, tuple(coeffs))

    def from_coeffs(self, coeffs: Sequence[int]) -> FieldElement:
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) > self.k:
            raise FieldError(f"{len(coeffs)} coefficients for degree-{self.k} field")
        return FieldElement(self, coeffs + (0,) * (self.k - len(coeffs)))

    @property
    def zero(self) -> FieldElement:
        return self(0)

    @property
    def one(self) -> FieldElement:
        return self(1)

    def elements(self) -> Iterator[FieldElement]:
        return (self.decode(c) for c in range(self.q))

    @cached_property
    def _reduction(self) -> tuple[int, ...]:
        # x^k == -(m_0 + ... + m_{k-1} x^{k-1})
        return tuple((-c) % self.p for c in self.modulus[:-1])

    @cached_property
    def nonresidue(self) -> FieldElement:
        """Canonically smallest non-square."""
        for a in self.elements():
            if jacobi(a) == -1:
                return a
        raise AssertionError("odd field without a non-square")

    @cached_property
    def tables(self) -> FieldTables:
        return FieldTables.build(self)


class FieldElement:
    """Immutable, fully reduced element of a ``FieldSpec``.

    Supports ``+ - * / **`` with other elements of the same field or plain
    integers (taken through Z -> F_q).
    """

    __slots__ = ("owner", "coeffs", "_code")

    def __init__(self, owner: FieldSpec, coeffs: tuple[int, ...]):
        self.owner = owner
        self.coeffs = coeffs
        code = 0
        for c in reversed(coeffs):
            code = code * owner.p + c
        self._code = code

    def __int__(self) -> int:
        return self._code

    __index__ = __int__

    def encode(self) -> int:
        return self._code

    def __repr__(self) -> str:
        if self.owner.k == 1:
            return f"{self._code} (mod {self.owner.p})"
        return f"F_{self.owner.q}{list(self.coeffs)}"

    def __str__(self) -> str:
        return str(self._code)

    def __hash__(self) -> int:
        return hash((self.owner.q, self._code))

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.owner is not self.owner and other.owner != self.owner:
                raise FieldError(f"mixed fields: {self.owner!r} and {other.owner!r}")
            return other
        if isinstance(other, int):
            return self.owner(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self._code == other._code and (self.owner is other.owner or self.owner == other.owner)
        if isinstance(other, int):
            return self == self.owner(other)
        return NotImplemented

    def __lt__(self, other: FieldElement) -> bool:
        return self._code < self._coerce(other)._code

    def __le__(self, other: FieldElement) -> bool:
        return self._code <= self._coerce(other)._code

    def __gt__(self, other: FieldElement) -> bool:
        return self._code > self._coerce(other)._code

    def __ge__(self, other: FieldElement) -> bool:
        return self._code >= self._coerce(other)._code

    def __bool__(self) -> bool:
        return self._code != 0

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.owner.p
        return FieldElement(self.owner, tuple((x + y) % p for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> FieldElement:
        p = self.owner.p
        return FieldElement(self.owner, tuple((-x) % p for x in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.owner.p
        return FieldElement(self.owner, tuple((x - y) % p for x, y in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.owner
        p, k = F.p, F.k
        if k == 1:
            return FieldElement(F, (self.coeffs[0] * other.coeffs[0] % p,))
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    prod[i + j] += x * y
        red = F._reduction
        for d in range(2 * k - 2, k - 1, -1):
            c = prod[d] % p
            if c:
                base = d - k
                for i, r in enumerate(red):
                    prod[base + i] += c * r
        return FieldElement(F, tuple(c % p for c in prod[:k]))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if not self._code:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.owner.k == 1:
            return FieldElement(self.owner, (pow(self.coeffs[0], -1, self.owner.p),))
        return self ** (self.owner.q - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int) -> FieldElement:
        if e < 0:
            return self.inverse() ** (-e)
        if self.owner.k == 1:
            return FieldElement(self.owner, (pow(self.coeffs[0], e, self.owner.p),))
        result = self.owner.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> FieldSpec:
    """Build F_{p^k} using the lexicographically first monic irreducible
    modulus (coefficients compared lowest degree first).

    >>> make_field(5, 2).modulus
    (1, 1, 1)
    """
    if not isinstance(p, int) or not isinstance(k, int):
        raise FieldError("p and k must be integers")
    if k < 1:
        raise FieldError(f"extension degree must be >= 1, got {k}")
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if p <= 3:
        raise FieldError(f"characteristic must exceed 3, got {p}")
    if p**k >= MAX_Q:
        raise FieldError(f"q = {p}^{k} exceeds the supported bound 2^62")
    for low in itertools.product(range(p), repeat=k):
        modulus = low + (1,)
        if is_irreducible(modulus, p):
            return FieldSpec(p, k, modulus)
    raise AssertionError(f"no irreducible polynomial of degree {k} over F_{p}")


def field_of_order(q: int) -> FieldSpec:
    pk = prime_power(q)
    if pk is None:
        raise FieldError(f"{q} is not a prime power")
    return make_field(*pk)


def elements(spec: FieldSpec) -> list[FieldElement]:
    """All q elements in canonical order, starting at 0."""
    return list(spec.elements())


def jacobi(a: FieldElement) -> int:
    """Quadratic character of F_q via Euler's criterion: 0, 1 or -1."""
    if not a:
        return 0
    e = a ** ((a.owner.q - 1) // 2)
    if e == 1:
        return 1
    if e == -1:
        return -1
    raise AssertionError(f"Euler criterion gave {e!r}")


def sqrt(a: FieldElement) -> FieldElement | None:
    """Canonically smaller square root of ``a``, or None for a non-square."""
    F = a.owner
    if not a:
        return F.zero
    if jacobi(a) != 1:
        return None
    q = F.q
    if q % 4 == 3:
        x = a ** ((q + 1) // 4)
    else:
        # Tonelli-Shanks: q - 1 = Q * 2^S with Q odd
        Q, S = q - 1, 0
        while Q % 2 == 0:
            Q //= 2
            S += 1
        z = F.nonresidue
        M, c, t, x = S, z**Q, a**Q, a ** ((Q + 1) // 2)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2
                i += 1
            b = c ** (1 << (M - i - 1))
            M, c = i, b * b
            t, x = t * c, x * b
    assert x * x == a
    return min(x, -x)


def _factor(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True, eq=False)
class FieldTables:
    """Lookup tables over the integer encoding of a field.

    ``exp[i] = g**i`` for a primitive element g, ``log`` is its inverse with
    ``log[0] = -1``.  All arrays are int64 except ``jac`` (int8).
    """

    spec: FieldSpec
    exp: np.ndarray
    log: np.ndarray
    neg: np.ndarray
    inv: np.ndarray
    plus_one: np.ndarray
    jac: np.ndarray
    digits: np.ndarray

    @classmethod
    def build(cls, spec: FieldSpec) -> FieldTables:
        q, p = spec.q, spec.p
        if q > TABLE_MAX_Q:
            raise FieldError(f"lookup tables limited to q <= {TABLE_MAX_Q}")
        primes = _factor(q - 1)
        for g in spec.elements():
            if g and all(g ** ((q - 1) // ell) != 1 for ell in primes):
                break
        exp = np.empty(q - 1, dtype=np.int64)
        if spec.k == 1:
            gi, x = int(g), 1
            for i in range(q - 1):
                exp[i] = x
                x = x * gi % p
        else:
            x = spec.one
            for i in range(q - 1):
                exp[i] = int(x)
                x = x * g
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(q - 1)

        codes = np.arange(q, dtype=np.int64)
        digits = (codes[:, None] // (p ** np.arange(spec.k, dtype=np.int64))) % p
        weights = p ** np.arange(spec.k, dtype=np.int64)
        neg = ((-digits) % p) @ weights
        plus = digits.copy()
        plus[:, 0] = (plus[:, 0] + 1) % p
        plus_one = plus @ weights

        inv = np.zeros(q, dtype=np.int64)
        inv[exp] = exp[(-np.arange(q - 1)) % (q - 1)]

        jac = np.zeros(q, dtype=np.int8)
        jac[exp] = np.where(np.arange(q - 1) % 2 == 0, 1, -1)
        return cls(spec, exp, log, neg, inv, plus_one, jac, digits)

    @property
    def q(self) -> int:
        return self.spec.q

    def code(self, n: int) -> int:
        """Encoding of the integer image n * 1."""
        return n % self.spec.p

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        p = self.spec.p
        weights = p ** np.arange(self.spec.k, dtype=np.int64)
        return ((self.digits[a] + self.digits[b]) % p) @ weights

    def sub(self, a, b):
        return self.add(a, self.neg[np.asarray(b, dtype=np.int64)])

    @cached_property
    def add_table(self) -> np.ndarray:
        codes = np.arange(self.q)
        return self.add(codes[:, None], codes[None, :])

    @cached_property
    def mul_table(self) -> np.ndarray:
        codes = np.arange(self.q)
        return self.mul(codes[:, None], codes[None, :])
