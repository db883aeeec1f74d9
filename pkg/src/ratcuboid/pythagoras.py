"""Pythagorean triples, their generator pairs and the ratio/hyperbolic parameters.

A generator pair ``(x, y)`` produces the triple ``(2xy, x^2 - y^2, x^2 + y^2)``.
For a triple ``(p, q, h)`` there are two pairs: one with ``2xy = p`` and one
with ``2xy = q``.  Coordinates are surds, e.g. ``(3/sqrt 2, 1/sqrt 2)`` for
``(4, 3, 5)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .arith import Surd, surd_ratio
from .errors import DegenerateError, DomainError, NotCoherentError, PoleError

Num = Union[int, Fraction]


def _norm(v) -> Num:
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else v


@dataclass(frozen=True)
class PythTriple:
    """Legs ``p``, ``q`` and hypotenuse ``h`` with ``p^2 + q^2 = h^2``.

    Zero legs are allowed so degenerate products can be carried and flagged.
    """

    p: Num
    q: Num
    h: Num

    def __post_init__(self):
        p, q, h = (_norm(v) for v in (self.p, self.q, self.h))
        if p < 0 or q < 0 or h <= 0:
            raise DomainError(f"triple sides must be nonnegative: {(p, q, h)}")
        if p * p + q * q != h * h:
            raise DomainError(f"{p}^2 + {q}^2 != {h}^2")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "h", h)

    @property
    def degenerate(self) -> bool:
        return self.p == 0 or self.q == 0

    @property
    def is_integral(self) -> bool:
        return all(isinstance(v, int) for v in (self.p, self.q, self.h))

    @property
    def is_primitive(self) -> bool:
        return self.is_integral and math.gcd(self.p, self.q) == 1

    def swapped(self) -> "PythTriple":
        return PythTriple(self.q, self.p, self.h)

    def __iter__(self) -> Iterator[Num]:
        return iter((self.p, self.q, self.h))


@dataclass(frozen=True)
class GeneratorPair:
    """Surd coordinates ``(x, y)`` whose product ``xy`` is rational.

    :func:`generator_pairs` always returns ``x >= y``.  Pairs may also be built
    in the reverse order (``x < y``) to follow a caller's labelling; use
    :meth:`normalized` for the canonical order.
    """

    x: Surd
    y: Surd

    def __post_init__(self):
        x = self.x if isinstance(self.x, Surd) else Surd(Fraction(self.x))
        y = self.y if isinstance(self.y, Surd) else Surd(Fraction(self.y))
        if x.sign() <= 0 or y.sign() <= 0:
            raise DomainError(f"generator coordinates must be positive: {x}, {y}")
        if not (x * y).is_rational:
            raise DomainError(f"x*y must be rational, got {x} * {y}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def of(cls, x, y) -> "GeneratorPair":
        return cls(_as_surd(x), _as_surd(y))

    @property
    def degenerate(self) -> bool:
        return self.x == self.y

    @property
    def x2(self) -> Fraction:
        return self.x.square()

    @property
    def y2(self) -> Fraction:
        return self.y.square()

    @property
    def xy(self) -> Fraction:
        return (self.x * self.y).q

    def normalized(self) -> "GeneratorPair":
        return self if self.x >= self.y else GeneratorPair(self.y, self.x)

    def swapped(self) -> "GeneratorPair":
        return GeneratorPair(self.y, self.x)

    def quartic(self) -> Fraction:
        """``x^4 + y^4``."""
        return self.x2 ** 2 + self.y2 ** 2

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def _as_surd(v) -> Surd:
    return v if isinstance(v, Surd) else Surd(Fraction(v))


def generator_pairs(t: PythTriple) -> tuple[GeneratorPair, GeneratorPair]:
    """Both generator pairs of ``t``; the first has ``2xy = p``, the second ``2xy = q``.

    ``x^2 = (h + q)/2, y^2 = (h - q)/2`` for the first pair and the same with
    ``p`` for the second.  No reduction to a primitive triple is done.
    """
    if t.degenerate:
        raise DegenerateError(f"triple {tuple(t)} has a zero leg")
    h = Fraction(t.h)
    first = GeneratorPair(Surd.sqrt((h + t.q) / 2), Surd.sqrt((h - t.q) / 2))
    second = GeneratorPair(Surd.sqrt((h + t.p) / 2), Surd.sqrt((h - t.p) / 2))
    return first, second


def triple_from_pair(g: GeneratorPair) -> PythTriple:
    """``(2xy, |x^2 - y^2|, x^2 + y^2)``; a pair with ``x == y`` gives a degenerate triple."""
    return PythTriple(2 * g.xy, abs(g.x2 - g.y2), g.x2 + g.y2)


def prop1_check(t: PythTriple) -> Fraction:
    """Sum of fourth powers of all four generator coordinates; equals ``3/2 h^2``."""
    p1, p2 = generator_pairs(t)
    return p1.quartic() + p2.quartic()


@dataclass(frozen=True)
class RatioParams:
    t: Fraction
    k: Fraction

    def reproduces(self, p1: GeneratorPair, p2: GeneratorPair) -> bool:
        x1 = p1.x
        return (
            p2.x == x1 * self.t
            and p2.y == x1 * self.k
            and p1.y == x1 * self.t * self.k
        )


def check_coherent(p1: GeneratorPair, p2: GeneratorPair) -> None:
    if p1.xy != p2.xy:
        raise NotCoherentError(f"2xy differs: {2 * p1.xy} vs {2 * p2.xy}")


def ratio_params(p1: GeneratorPair, p2: GeneratorPair) -> RatioParams:
    """``t = x2/x1`` and ``k = y2/x1`` for two pairs sharing the even edge.

    Pairs are used in the order given, so ``(2, 26)`` and ``(26, 2)`` give
    different (equally valid) parameters.
    """
    check_coherent(p1, p2)
    t = surd_ratio(p2.x, p1.x)
    k = surd_ratio(p2.y, p1.x)
    params = RatioParams(t, k)
    assert params.reproduces(p1, p2)
    return params


@dataclass(frozen=True)
class HyperbolicParams:
    """``a1 = (x1 - y1)/(x1 + y1)``, ``ch = x3/y3`` and ``m^2 = a1*ch``."""

    a1: Fraction
    ch: Fraction
    ch_sq: Fraction
    sh_sq: Fraction
    m_sq: Fraction

    @classmethod
    def from_a1_ch(cls, a1, ch) -> "HyperbolicParams":
        a1, ch = Fraction(a1), Fraction(ch)
        return cls(a1, ch, ch * ch, ch * ch - 1, a1 * ch)

    @property
    def degenerate(self) -> bool:
        return self.a1 == 0 or self.sh_sq == 0

    def invariants_hold(self) -> bool:
        return self.ch_sq - self.sh_sq == 1 and self.m_sq ** 2 == self.a1 ** 2 * self.ch_sq


def hyperbolic_params(p1: GeneratorPair, p3: GeneratorPair) -> HyperbolicParams:
    """Parameters tying the ``2xy = a`` pair of the first face to the first pair of the third."""
    p1, p3 = p1.normalized(), p3.normalized()
    a1 = surd_ratio(p1.x - p1.y, p1.x + p1.y)
    ch = surd_ratio(p3.x, p3.y)
    return HyperbolicParams.from_a1_ch(a1, ch)


def ch_param_sides(y, ch_sq) -> tuple[Fraction, Fraction]:
    """Both sides of ``4y^4 ch^2 + y^4 sh^4 = y^4 (1 + ch^2)^2`` with ``sh^2 = ch^2 - 1``."""
    y4 = Fraction(y) ** 4
    c = Fraction(ch_sq)
    s = c - 1
    return 4 * y4 * c + y4 * s * s, y4 * (1 + c) ** 2


def verify_param14(y, ch_sq) -> bool:
    if Fraction(ch_sq) < 1:
        raise DomainError(f"ch^2 must be >= 1, got {ch_sq}")
    lhs, rhs = ch_param_sides(y, ch_sq)
    return lhs == rhs


def a1_param_sides(y, a1) -> tuple[Fraction, Fraction]:
    """Both sides of the ``a1``-parametrised triple scaled by ``y^4``."""
    a = Fraction(a1)
    if a == 1:
        raise PoleError("a1 = 1 is a pole")
    y4 = Fraction(y) ** 4
    leg1 = y4 * 4 * (1 + a) ** 2 / (1 - a) ** 2
    leg2 = y4 * 16 * a * a / (1 - a) ** 4
    hyp = y4 * 4 * (1 + a * a) ** 2 / (1 - a) ** 4
    return leg1 + leg2, hyp


def verify_param15(y, a1) -> bool:
    lhs, rhs = a1_param_sides(y, a1)
    return lhs == rhs


def triples_up_to(hmax: int, primitive: bool = True) -> Iterator[PythTriple]:
    """Euclid's formula enumeration, ``(2mn, m^2 - n^2, m^2 + n^2)`` times ``k``; test utility."""
    m = 2
    while m * m + 1 <= hmax:
        for n in range(1, m):
            if (m - n) % 2 == 0 or math.gcd(m, n) != 1:
                continue
            base = (2 * m * n, m * m - n * n, m * m + n * n)
            if base[2] > hmax:
                continue
            k = 1
            while k * base[2] <= hmax:
                yield PythTriple(k * base[0], k * base[1], k * base[2])
                if primitive:
                    break
                k += 1
        m += 1
