"""Elliptic curves attached to a cuboid system and the obstruction checks around them.

Two families:

* first family, from two generator pairs sharing the even edge ``a = 2xy``:
  ``y^2 = x^3 - (u^4 - v^4) x`` and ``y^2 = (u^4 + v^4) x - x^3``;
* second family, from the hyperbolic parameters: ``y^2 = x^3 - n^2 x`` with
  ``x = a1 ch``, ``y = a1 m``, ``n = a1 sh``.

Curves are kept as ``y^2 = s x^3 + N x`` with an explicit sign ``s`` so the
``N x - x^3`` form stays in its original coordinates.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

from .arith import Surd, factorize, is_rat_square, is_square
from .cuboid import CuboidSq, cuboid_from_edges
from .errors import DegenerateError, DomainError, IncompatibleRadicandError
from .pythagoras import (
    GeneratorPair,
    HyperbolicParams,
    PythTriple,
    check_coherent,
    generator_pairs,
    hyperbolic_params,
)


# ---------------------------------------------------------------------------
# curves and points

@dataclass(frozen=True)
class MordellCurve:
    s: int
    N: Fraction

    def __post_init__(self):
        if self.s not in (1, -1):
            raise DomainError(f"leading sign must be +-1, got {self.s}")
        N = Fraction(self.N)
        if N == 0:
            raise DegenerateError("N = 0 gives a singular curve")
        object.__setattr__(self, "N", N)

    def rhs(self, x) -> Fraction:
        x = Fraction(x)
        return self.s * x ** 3 + self.N * x

    def __str__(self) -> str:
        n = self.N.numerator if self.N.denominator == 1 else self.N
        if self.s == 1:
            sign = "+" if n > 0 else "-"
            return f"y^2 = x^3 {sign} {abs(n)}*x"
        return f"y^2 = {n}*x - x^3"


@dataclass(frozen=True)
class CurvePoint:
    """Point carried by ``x`` and ``y^2``; ``y`` is kept as a surd when real."""

    x: Fraction
    y_sq: Fraction
    y: Optional[Surd] = None

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y_sq", Fraction(self.y_sq))
        y = self.y
        if y is None and self.y_sq >= 0:
            y = Surd.sqrt(self.y_sq)
        if y is not None and y.square() != self.y_sq:
            raise DomainError(f"y = {y} does not square to {self.y_sq}")
        object.__setattr__(self, "y", y)

    @classmethod
    def on(cls, curve: MordellCurve, x) -> "CurvePoint":
        return cls(Fraction(x), curve.rhs(x))


def on_curve(c: MordellCurve, p: CurvePoint) -> bool:
    return p.y_sq == c.rhs(p.x)


class CurveEntry(NamedTuple):
    label: str
    curve: MordellCurve
    point: CurvePoint


# ---------------------------------------------------------------------------
# the generator-pair system of a cuboid

@dataclass(frozen=True)
class CuboidSystem:
    """Generator pairs of the three faces of a cuboid with integer edges ``a, b, d``.

    Face ``(a, b, c)``: ``p1`` has ``2xy = a``, ``p11`` has ``2xy = b``.
    Face ``(a, d, e)``: ``p2`` has ``2xy = a``, ``p21`` has ``2xy = d``.
    Face ``(b, d, f)``: ``p3`` has ``2xy = b``, ``p31`` has ``2xy = d``.
    A face with an irrational diagonal has no surd pairs; its entries are ``None``.
    """

    a: int
    b: int
    d: int
    cuboid: CuboidSq = field(init=False)
    pairs: dict = field(init=False)

    def __post_init__(self):
        c = cuboid_from_edges(self.a, self.b, self.d)
        object.__setattr__(self, "cuboid", c)
        pairs: dict[str, Optional[GeneratorPair]] = {}
        for names, (p, q, h2) in (
            (("p1", "p11"), (self.a, self.b, c.c2)),
            (("p2", "p21"), (self.a, self.d, c.e2)),
            (("p3", "p31"), (self.b, self.d, c.f2)),
        ):
            h = math.isqrt(h2)
            if h * h == h2:
                first, second = generator_pairs(PythTriple(p, q, h))
            else:
                first = second = None
            pairs[names[0]], pairs[names[1]] = first, second
        object.__setattr__(self, "pairs", pairs)

    @property
    def g2(self) -> int:
        return self.cuboid.g2

    def __getitem__(self, name: str) -> Optional[GeneratorPair]:
        return self.pairs[name]


# which pair combinations each representation of g^2 tries
CASE_OPTIONS = {
    "case1": (("p1", "p2"), ("p1", "p21"), ("p11", "p2"), ("p11", "p21")),
    "case2": (("p1", "p11"), ("p1", "p3"), ("p11", "p3"), ("p11", "p31")),
    "case3": (("p3", "p31"), ("p3", "p2"), ("p31", "p2"), ("p31", "p21")),
}
REPRESENTATIONS = {"case1": ("p1", "p2"), "case2": ("p11", "p3"), "case3": ("p21", "p31")}


def quartic_sum(*pairs: GeneratorPair) -> Fraction:
    return sum((p.quartic() for p in pairs), Fraction(0))


def hyperbolic_g2(h: HyperbolicParams, p3: GeneratorPair) -> Fraction:
    """``(m^4 + 1)(x3^4 + y3^4 m^4) / m^4``."""
    if h.m_sq == 0:
        raise DegenerateError("m = 0")
    p3 = p3.normalized()
    m4 = h.m_sq ** 2
    return (m4 + 1) * (p3.x2 ** 2 + p3.y2 ** 2 * m4) / m4


@dataclass
class RepresentationEntry:
    name: str
    pairs: tuple
    value: Optional[Fraction]
    matches: Optional[bool]
    note: str = ""


def g2_representations(system: CuboidSystem) -> list[RepresentationEntry]:
    """Evaluate every quartic representation of ``g^2`` the system supports.

    Mismatches are reported, never raised.  The per-case option scan records
    which of the four pair combinations reproduce ``g^2``.
    """
    g2 = system.g2
    out = []
    for case, names in REPRESENTATIONS.items():
        ps = [system[n] for n in names]
        if None in ps:
            out.append(RepresentationEntry(case, names, None, None, "face diagonal irrational"))
            continue
        v = quartic_sum(*ps)
        out.append(RepresentationEntry(case, names, v, v == g2))
    p1, p3 = system["p1"], system["p3"]
    if p1 is None or p3 is None:
        out.append(RepresentationEntry("hyperbolic", ("p1", "p3"), None, None, "face diagonal irrational"))
    else:
        try:
            h = hyperbolic_params(p1, p3)
            v = hyperbolic_g2(h, p3)
            out.append(RepresentationEntry("hyperbolic", ("p1", "p3"), v, v == g2))
        except (IncompatibleRadicandError, DegenerateError) as exc:
            out.append(RepresentationEntry("hyperbolic", ("p1", "p3"), None, None, str(exc)))
    for case, options in CASE_OPTIONS.items():
        for names in options:
            ps = [system[n] for n in names]
            if None in ps:
                continue
            v = quartic_sum(*ps)
            out.append(RepresentationEntry(f"{case}-option", names, v, v == g2))
    return out


class ProductIdentities(NamedTuple):
    via_x1: tuple[Fraction, Fraction]
    via_x2: tuple[Fraction, Fraction]


def product_identities(p1: GeneratorPair, p2: GeneratorPair, g2) -> ProductIdentities:
    """``(x1^4 + x2^4)(x1^4 + y2^4) = g^2 x1^4`` and ``(x1^4 + x2^4)(x2^4 + y1^4) = g^2 x2^4``.

    Pairs are taken in the order given.
    """
    check_coherent(p1, p2)
    x1, y1, x2, y2 = p1.x2 ** 2, p1.y2 ** 2, p2.x2 ** 2, p2.y2 ** 2
    g2 = Fraction(g2)
    return ProductIdentities(
        ((x1 + x2) * (x1 + y2), g2 * x1),
        ((x1 + x2) * (x2 + y1), g2 * x2),
    )


# ---------------------------------------------------------------------------
# first family

def _family_for(pair: GeneratorPair, tag: str) -> list[CurveEntry]:
    p = pair.normalized()
    u2, v2 = p.x2, p.y2
    out = []
    if u2 != v2:
        diff = MordellCurve(1, -(u2 * u2 - v2 * v2))
        out.append(CurveEntry(f"{tag}:difference", diff, CurvePoint(u2, u2 * v2 * v2, p.x * p.y * p.y)))
    total = MordellCurve(-1, u2 * u2 + v2 * v2)
    out.append(CurveEntry(f"{tag}:sum@y^2", total, CurvePoint(v2, v2 * u2 * u2, p.y * p.x * p.x)))
    out.append(CurveEntry(f"{tag}:sum@x^2", total, CurvePoint(u2, u2 * v2 * v2, p.x * p.y * p.y)))
    return out


def first_curves(p1: GeneratorPair, p2: GeneratorPair) -> list[CurveEntry]:
    """Curves ``y^2 = x^3 - (u^4 - v^4)x`` and ``y^2 = (u^4 + v^4)x - x^3`` for both pairs.

    For a pair ``u > v`` the difference curve passes through ``(u^2, u v^2)``
    and the sum curve through both ``(v^2, v u^2)`` and ``(u^2, u v^2)``.
    That is four distinct curves carrying six points.  For ``p2`` the point
    ``(u^2, u v^2)`` is ``(x2^2, x1 y1 y2)``.
    """
    check_coherent(p1, p2)
    if p2.degenerate:
        raise DegenerateError("x2 = y2 gives N = 0")
    out = _family_for(p2, "p2") + _family_for(p1, "p1")
    for e in out:
        assert on_curve(e.curve, e.point), e
    return out


# ---------------------------------------------------------------------------
# second family

@dataclass(frozen=True)
class CongruentParams:
    n_sq: Fraction
    x: Fraction
    y: Surd

    @property
    def curve_rhs(self) -> Fraction:
        return self.x ** 3 - self.n_sq * self.x


class SecondCurve(NamedTuple):
    params: CongruentParams
    curve: MordellCurve
    point: CurvePoint
    scale_sq: int  # lambda^2; lambda itself may be a surd
    int_curve: MordellCurve
    int_point: CurvePoint


def _vp(r: Fraction, p: int) -> int:
    num, den, e = r.numerator, r.denominator, 0
    while num % p == 0:
        num //= p
        e += 1
    while den % p == 0:
        den //= p
        e -= 1
    return e


def integer_scale(x: Fraction, n_sq: Fraction, y_sq: Fraction) -> int:
    """Least positive integer ``mu`` making ``mu x``, ``mu^2 n^2`` integers and ``mu^3 y^2`` a square.

    ``mu = lambda^2`` for the change of variables ``x -> lambda^2 x``,
    ``y -> lambda^3 y``, ``n^2 -> lambda^4 n^2``; ``lambda`` need not be rational.
    """
    vals = [Fraction(v) for v in (x, n_sq, y_sq)]
    primes: set[int] = set()
    for v in vals:
        if v != 0:
            primes |= set(factorize(abs(v.numerator))) | set(factorize(v.denominator))
    mu = 1
    for p in sorted(primes):
        ex, en, ey = (_vp(v, p) if v != 0 else None for v in vals)
        k = 0
        while True:
            ok = (ex is None or k + ex >= 0) and (en is None or 2 * k + en >= 0)
            if ok and (ey is None or (3 * k + ey >= 0 and (3 * k + ey) % 2 == 0)):
                break
            k += 1
        mu *= p ** k
    return mu


def second_curve(h: HyperbolicParams) -> SecondCurve:
    """``y^2 = x^3 - n^2 x`` at ``x = a1 ch``, ``y^2 = a1^2 m^2``, ``n^2 = a1^2 sh^2``.

    Also returns the integral model obtained with the least ``lambda^2``.
    """
    if h.a1 == 0:
        raise DegenerateError("a1 = 0")
    if h.sh_sq == 0:
        raise DegenerateError("sh = 0 gives n = 0")
    n_sq = h.a1 ** 2 * h.sh_sq
    x = h.a1 * h.ch
    y_sq = h.a1 ** 2 * h.m_sq
    y = Surd.sqrt(y_sq) if y_sq >= 0 else None
    params = CongruentParams(n_sq, x, y)
    curve = MordellCurve(1, -n_sq)
    point = CurvePoint(x, y_sq, y)
    mu = integer_scale(x, n_sq, y_sq)
    int_curve = MordellCurve(1, -n_sq * mu * mu)
    int_point = CurvePoint(x * mu, y_sq * mu ** 3)
    assert on_curve(curve, point) and on_curve(int_curve, int_point)
    return SecondCurve(params, curve, point, mu, int_curve, int_point)


# ---------------------------------------------------------------------------
# triangles from points, obstructions

@dataclass(frozen=True)
class RightTriangle:
    a: Surd
    b: Surd
    c: Surd

    @property
    def is_rational(self) -> bool:
        return self.a.is_rational and self.b.is_rational and self.c.is_rational

    @property
    def holds(self) -> bool:
        return self.a.square() + self.b.square() == self.c.square()


def koblitz_sides_sq(n_sq, x) -> tuple[Fraction, Fraction, Fraction]:
    """Squared sides times ``y^2``: ``((x^2 - n^2)^2, 4 n^2 x^2, (x^2 + n^2)^2)``."""
    n_sq, x = Fraction(n_sq), Fraction(x)
    return (x * x - n_sq) ** 2, 4 * n_sq * x * x, (x * x + n_sq) ** 2


def koblitz_triangle(n_sq, p: CurvePoint) -> RightTriangle:
    """Right triangle ``(|x^2 - n^2|/y, 2nx/y, (x^2 + n^2)/y)`` from a point on ``y^2 = x^3 - n^2 x``.

    Sides are surds; the triangle is rational only when ``n`` and ``y`` are.
    The hypotenuse uses ``x^2 + n^2``, the form forced by the squared identity.
    """
    n_sq = Fraction(n_sq)
    if p.y_sq != p.x ** 3 - n_sq * p.x:
        raise DomainError("point is not on y^2 = x^3 - n^2 x")
    if p.y_sq == 0 or p.x ** 2 == n_sq:
        raise DegenerateError("y = 0: zero leg, no triangle")
    if p.y_sq < 0:
        raise DomainError("point has imaginary y")
    if n_sq < 0:
        raise DomainError("n^2 must be nonnegative")
    y, n = p.y, Surd.sqrt(n_sq)
    tri = RightTriangle(
        Surd(abs(p.x ** 2 - n_sq)) / y,
        Surd(2 * p.x) * n / y,
        Surd(p.x ** 2 + n_sq) / y,
    )
    assert tri.holds
    return tri


def quartic_leg_sides(x2, y2) -> tuple[int, int]:
    """``(y2^8 + 4 x2^4 (x2^4 + y2^4), (2 x2^4 + y2^4)^2)``."""
    x4, y4 = Fraction(x2) ** 4, Fraction(y2) ** 4
    return y4 * y4 + 4 * x4 * (x4 + y4), (2 * x4 + y4) ** 2


@dataclass(frozen=True)
class ObstructionReport:
    x2: int
    y2: int
    leg_identity: tuple
    leg_identity_holds: bool
    leg: int  # 4 x2^4 (x2^4 + y2^4)
    leg_is_square: bool
    quartic_sum: int  # x2^4 + y2^4
    quartic_sum_is_square: bool
    coprime: bool
    opposite_parity: bool

    @property
    def hypotheses_hold(self) -> bool:
        return self.coprime and self.opposite_parity


def lemma1_obstruction(x2: int, y2: int) -> ObstructionReport:
    if x2 < 1 or y2 < 1:
        raise DomainError("x2, y2 must be >= 1")
    lhs, rhs = quartic_leg_sides(x2, y2)
    q = x2 ** 4 + y2 ** 4
    leg = 4 * x2 ** 4 * q
    return ObstructionReport(
        x2, y2, (int(lhs), int(rhs)), lhs == rhs,
        leg, is_square(leg), q, is_square(q),
        math.gcd(x2, y2) == 1, (x2 - y2) % 2 == 1,
    )


@dataclass(frozen=True)
class UnitGapReport:
    lhs: Fraction  # 1 + 4 sh^2 ch^2
    rhs: Fraction  # (sh^2 + ch^2)^2
    holds: bool
    product: Fraction  # 4 sh^2 ch^2
    product_is_square: bool
    degenerate: bool


def prop4_check(ch_sq, sh_sq) -> UnitGapReport:
    ch_sq, sh_sq = Fraction(ch_sq), Fraction(sh_sq)
    if ch_sq - sh_sq != 1:
        raise DomainError(f"ch^2 - sh^2 must be 1, got {ch_sq - sh_sq}")
    prod = 4 * sh_sq * ch_sq
    lhs, rhs = 1 + prod, (sh_sq + ch_sq) ** 2
    return UnitGapReport(lhs, rhs, lhs == rhs, prod, is_rat_square(prod), sh_sq == 0)


def kt_identity(k, t) -> tuple[bool, bool]:
    """``k^4 t^2 = t^2 (k^4 + t^4) - t^6`` and ``k^4 t^2 = t^6 + t^2 (k^4 - t^4)``."""
    k, t = Fraction(k), Fraction(t)
    lhs = k ** 4 * t ** 2
    return lhs == t ** 2 * (k ** 4 + t ** 4) - t ** 6, lhs == t ** 6 + t ** 2 * (k ** 4 - t ** 4)


def edge_squares_from_params(h: HyperbolicParams, s) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """``(a^2, b^2, d^2, g^2)`` rebuilt from ``a1``, ``m`` and ``sh`` with scale ``s^4``.

    ``s`` is the smaller coordinate of the first pair.  The sum of the first
    three equals the fourth identically.
    """
    a, m4 = h.a1, h.m_sq ** 2
    s4 = (s.square() if isinstance(s, Surd) else Fraction(s) ** 2) ** 2
    if a == 1:
        raise DomainError("a1 = 1")
    if m4 == 0:
        raise DegenerateError("m = 0")
    a2 = 4 * s4 * (1 + a) ** 2 / (1 - a) ** 2
    b2 = s4 * 16 * a * a / (1 - a) ** 4
    d2 = 16 * s4 * a ** 4 * h.sh_sq ** 2 / (4 * m4 * (1 - a) ** 4)
    g2 = 4 * s4 * (m4 + 1) * (m4 + a ** 4) / (m4 * (1 - a) ** 4)
    return a2, b2, d2, g2


@dataclass(frozen=True)
class ShEquationReport:
    sh4: Fraction
    sh4_from_m: Fraction
    sh4_holds: bool
    kt_holds: Optional[bool] = None
    edge_squares: Optional[tuple] = None
    edge_sum_holds: Optional[bool] = None


def lemma2_equivalence(h: HyperbolicParams, k=None, t=None, s=None) -> ShEquationReport:
    """``sh^4 = ((m^4 - a1^2)/a1^2)^2`` plus, when given, the ``(k, t)`` identity and the
    edge-square decomposition at scale ``s``."""
    if h.a1 == 0:
        raise DegenerateError("a1 = 0")
    sh4 = h.sh_sq ** 2
    a_sq = h.a1 ** 2
    from_m = ((h.m_sq ** 2 - a_sq) / a_sq) ** 2
    kt = all(kt_identity(k, t)) if k is not None and t is not None else None
    edges = holds = None
    if s is not None:
        edges = edge_squares_from_params(h, s)
        holds = edges[0] + edges[1] + edges[2] == edges[3]
    return ShEquationReport(sh4, from_m, sh4 == from_m, kt, edges, holds)
