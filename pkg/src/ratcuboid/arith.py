"""Exact integer, rational and quadratic-surd arithmetic.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`.
:class:`Surd` adds values of the form ``q * sqrt(d)`` with ``q`` rational and
``d`` a squarefree positive integer.  Surds are closed under multiplication and
division; addition is only defined between surds sharing a radicand.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Optional, Union

from .errors import DomainError, IncompatibleRadicandError

RatLike = Union[int, Fraction]


def int_sqrt(n: int) -> Optional[int]:
    """Return ``r`` with ``r*r == n``, or ``None`` when ``n`` is not a perfect square."""
    if n < 0:
        raise DomainError(f"int_sqrt of negative number {n}")
    r = math.isqrt(n)
    return r if r * r == n else None


def is_square(n: int) -> bool:
    """True for perfect squares of nonnegative integers; negatives are never squares."""
    return n >= 0 and int_sqrt(n) is not None


def rat_sqrt(r: RatLike) -> Optional[Fraction]:
    """Exact rational square root, or ``None``."""
    r = Fraction(r)
    if r < 0:
        return None
    num, den = int_sqrt(r.numerator), int_sqrt(r.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def is_rat_square(r: RatLike) -> bool:
    return rat_sqrt(r) is not None


@lru_cache(maxsize=4096)
def squarefree_decompose(n: int) -> tuple[int, int]:
    """Split ``n`` as ``q*q*d`` with ``d`` squarefree.

    Trial division up to ``sqrt(n)``; fine for the desk-scale values used here.
    """
    if n <= 0:
        raise DomainError(f"squarefree_decompose needs n >= 1, got {n}")
    r = int_sqrt(n)
    if r is not None:
        return r, 1
    q, d = 1, 1
    m = n
    p = 2
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            q *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    d *= m
    return q, d


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation by trial division (``n >= 1``)."""
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _as_surd(v: "SurdLike") -> "Surd":
    if isinstance(v, Surd):
        return v
    if isinstance(v, Rational):
        return Surd(Fraction(v))
    raise TypeError(f"cannot interpret {v!r} as a surd")


@dataclass(frozen=True)
class Surd:
    """Exact value ``q * sqrt(d)``; canonical with ``d`` squarefree and ``d == 1`` when ``q == 0``."""

    q: Fraction
    d: int = 1

    def __post_init__(self):
        q = Fraction(self.q)
        d = int(self.d)
        if d < 1:
            raise DomainError(f"radicand must be positive, got {d}")
        if q == 0:
            d = 1
        elif d > 1:
            k, d = squarefree_decompose(d)
            q *= k
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", d)

    @classmethod
    def sqrt(cls, r: RatLike) -> "Surd":
        """Nonnegative square root of a rational as a surd."""
        r = Fraction(r)
        if r < 0:
            raise DomainError(f"square root of negative rational {r}")
        if r == 0:
            return cls(Fraction(0))
        # sqrt(n/m) = sqrt(n*m)/m
        return cls(Fraction(1, r.denominator), r.numerator * r.denominator)

    # -- views ---------------------------------------------------------------
    def square(self) -> Fraction:
        return self.q * self.q * self.d

    @property
    def is_rational(self) -> bool:
        return self.d == 1

    def to_rational(self) -> Fraction:
        if self.d != 1:
            raise IncompatibleRadicandError(f"{self} is irrational")
        return self.q

    def sign(self) -> int:
        return (self.q > 0) - (self.q < 0)

    def __float__(self) -> float:
        return float(self.q) * math.sqrt(self.d)

    def __bool__(self) -> bool:
        return self.q != 0

    def __str__(self) -> str:
        if self.d == 1:
            return str(self.q)
        if self.q == 1:
            return f"sqrt({self.d})"
        if self.q == -1:
            return f"-sqrt({self.d})"
        return f"{self.q}*sqrt({self.d})"

    # -- arithmetic ----------------------------------------------------------
    def __neg__(self) -> "Surd":
        return Surd(-self.q, self.d)

    def __abs__(self) -> "Surd":
        return Surd(abs(self.q), self.d)

    def __mul__(self, other: "SurdLike") -> "Surd":
        try:
            o = _as_surd(other)
        except TypeError:
            return NotImplemented
        g = math.gcd(self.d, o.d)
        # sqrt(d1*d2) = g*sqrt(d1*d2/g^2); both squarefree so the quotient is too
        return Surd(self.q * o.q * g, (self.d // g) * (o.d // g))

    __rmul__ = __mul__

    def inverse(self) -> "Surd":
        if self.q == 0:
            raise ZeroDivisionError("inverse of zero surd")
        # 1/(q sqrt d) = sqrt(d)/(q d)
        return Surd(1 / (self.q * self.d), self.d)

    def __truediv__(self, other: "SurdLike") -> "Surd":
        try:
            o = _as_surd(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: "SurdLike") -> "Surd":
        return _as_surd(other) * self.inverse()

    def __pow__(self, e: int) -> "Surd":
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        out = Surd(Fraction(1))
        for _ in range(e):
            out = out * self
        return out

    def __add__(self, other: "SurdLike") -> "Surd":
        try:
            o = _as_surd(other)
        except TypeError:
            return NotImplemented
        return surd_add(self, o)

    __radd__ = __add__

    def __sub__(self, other: "SurdLike") -> "Surd":
        try:
            o = _as_surd(other)
        except TypeError:
            return NotImplemented
        return surd_add(self, -o)

    def __rsub__(self, other: "SurdLike") -> "Surd":
        return surd_add(_as_surd(other), -self)

    # -- comparison (real values) -------------------------------------------
    def _cmp(self, other: "SurdLike") -> int:
        o = _as_surd(other)
        s1, s2 = self.sign(), o.sign()
        if s1 != s2:
            return (s1 > s2) - (s1 < s2)
        a, b = self.square(), o.square()
        c = (a > b) - (a < b)
        return c if s1 >= 0 else -c

    def __eq__(self, other):
        if isinstance(other, Surd):
            return self.q == other.q and self.d == other.d
        if isinstance(other, Rational):
            return self.d == 1 and self.q == other
        return NotImplemented

    def __hash__(self):
        return hash(self.q) if self.d == 1 else hash((self.q, self.d))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0


SurdLike = Union[Surd, int, Fraction]


def surd_mul(a: SurdLike, b: SurdLike) -> Surd:
    return _as_surd(a) * _as_surd(b)


def surd_add(a: SurdLike, b: SurdLike) -> Surd:
    a, b = _as_surd(a), _as_surd(b)
    if a.q == 0:
        return b
    if b.q == 0:
        return a
    if a.d != b.d:
        raise IncompatibleRadicandError(f"cannot add {a} and {b}: radicands {a.d} != {b.d}")
    return Surd(a.q + b.q, a.d)


def surd_ratio(a: SurdLike, b: SurdLike) -> Fraction:
    """Rational value of ``a/b``; raises when the quotient is irrational."""
    r = _as_surd(a) / _as_surd(b)
    if not r.is_rational:
        raise IncompatibleRadicandError(f"ratio {a} / {b} = {r} is irrational")
    return r.q


def fmt(v) -> str:
    """Exact string rendering used by reports."""
    if isinstance(v, Fraction) and v.denominator == 1:
        return str(v.numerator)
    return str(v)
