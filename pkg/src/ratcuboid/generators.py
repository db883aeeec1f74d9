"""Two ways to manufacture cuboids: Euler's polynomials and triangle multiplication.

Triangle multiplication takes two Pythagorean triples ``(p1, q1, h1)`` and
``(p2, q2, h2)`` and produces four triples on the common hypotenuse ``h1 h2``:
two from the Brahmagupta-Fibonacci identity and two by scaling each triple by
the other's hypotenuse.  Cuboids are then assembled from these legs.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .arith import int_sqrt
from .cuboid import CuboidSq, classify, cuboid_from_squares, lemma3_check
from .errors import DomainError
from .pythagoras import PythTriple


@dataclass(frozen=True)
class EulerBrick:
    n: int
    signed: tuple[int, int, int]  # (X, Y, Z) before taking absolute values
    cuboid: CuboidSq

    @property
    def edges(self) -> tuple[int, int, int]:
        return tuple(abs(v) for v in self.signed)


def euler_polynomials(n: int) -> tuple[int, int, int]:
    return (
        n ** 6 - 15 * n ** 4 + 15 * n ** 2 - 1,
        6 * n ** 5 - 20 * n ** 3 + 6 * n,
        8 * n ** 5 - 8 * n,
    )


def euler_brick(n: int) -> EulerBrick:
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    X, Y, Z = euler_polynomials(n)
    return EulerBrick(n, (X, Y, Z), cuboid_from_squares(X * X, Y * Y, Z * Z))


def bf_products(t1: PythTriple, t2: PythTriple) -> tuple[tuple[int, int], tuple[int, int]]:
    """Leg pairs from ``(p1^2+q1^2)(p2^2+q2^2)`` written as a sum of two squares both ways."""
    p1, q1, _ = t1
    p2, q2, _ = t2
    return (
        (abs(p1 * p2 - q1 * q2), p1 * q2 + q1 * p2),
        (p1 * p2 + q1 * q2, abs(p1 * q2 - q1 * p2)),
    )


def leg_splits(L: int) -> list[tuple[int, int]]:
    """All ``(u, v)`` with ``u < v`` and ``u^2 + v^2 = L^2``."""
    out = []
    L2 = L * L
    for u in range(1, L):
        v = int_sqrt(L2 - u * u)
        if v is not None and u < v:
            out.append((u, v))
    return out


@dataclass(frozen=True)
class AssembledCuboid:
    cuboid: CuboidSq
    method: str  # "cross", "split" or "products"
    source: str

    @property
    def key(self) -> tuple[int, int, int]:
        return tuple(sorted((self.cuboid.a2, self.cuboid.b2, self.cuboid.d2)))


@dataclass
class TriangleProduct:
    t1: PythTriple
    t2: PythTriple
    derived: list = field(default_factory=list)  # (PythTriple, label)
    degenerate: list = field(default_factory=list)  # labels of zero-leg triples
    assembled: list = field(default_factory=list)

    @property
    def hypotenuse(self) -> int:
        return self.t1.h * self.t2.h

    def integral_diagonal(self) -> list[AssembledCuboid]:
        H2 = self.hypotenuse ** 2
        return [c for c in self.assembled if c.cuboid.g2 == H2]

    def other_diagonal(self) -> list[AssembledCuboid]:
        H2 = self.hypotenuse ** 2
        return [c for c in self.assembled if c.cuboid.g2 != H2]


def _assemble(prod: TriangleProduct, split_limit: int) -> list[AssembledCuboid]:
    found: dict[tuple, AssembledCuboid] = {}

    def add(c: CuboidSq, method: str, source: str):
        item = AssembledCuboid(c, method, source)
        found.setdefault(item.key, item)

    live = [t for t, _ in prod.derived if not t.degenerate]
    # cross: legs (p, q) and (r, s) on the same hypotenuse give edges p, s and
    # x with x^2 = q^2 - s^2, so that p^2 + x^2 = r^2 and s^2 + x^2 = q^2
    for t, u in itertools.permutations(live, 2):
        for p, q in ((t.p, t.q), (t.q, t.p)):
            for r, s in ((u.p, u.q), (u.q, u.p)):
                x2 = q * q - s * s
                if x2 == 0:
                    continue
                add(cuboid_from_squares(p * p, s * s, x2), "cross", f"({p},{q})x({r},{s})")
    # split: a leg L written as u^2 + v^2 with the partner leg as third edge
    for t in live:
        for L, partner in ((t.p, t.q), (t.q, t.p)):
            if L > split_limit:
                continue
            for u, v in leg_splits(L):
                add(cuboid_from_squares(u * u, v * v, partner * partner), "split", f"{L}=({u},{v})+{partner}")
    # products: three of the four leg products; spatial diagonal not h1 h2
    p1, q1, _ = prod.t1
    p2, q2, _ = prod.t2
    legs = [p1 * p2, p1 * q2, q1 * p2, q1 * q2]
    for trio in itertools.combinations(legs, 3):
        if 0 in trio:
            continue
        add(cuboid_from_squares(*(v * v for v in trio)), "products", f"{trio}")
    return sorted(found.values(), key=lambda c: (c.method != "cross", c.key))


def multiply_triangles(t1: PythTriple, t2: PythTriple, split_limit: int = 20000) -> TriangleProduct:
    """Derived triples on ``h1 h2`` plus every cuboid assembled from them.

    Assembly is a superset construction: cross combinations of two derived
    triples, integer splits of a single leg, and triples of leg products.
    Results are deduplicated by edge-square multiset and sorted.
    """
    if t1.degenerate or t2.degenerate:
        raise DomainError("input triples must have positive legs")
    if not (t1.is_integral and t2.is_integral):
        raise DomainError("input triples must be integral")
    H = t1.h * t2.h
    out = TriangleProduct(t1, t2)
    (a1, b1), (a2, b2) = bf_products(t1, t2)
    candidates = [
        ((a1, b1), "bf-difference"),
        ((a2, b2), "bf-sum"),
        ((t1.p * t2.h, t1.q * t2.h), "scaled-first"),
        ((t2.p * t1.h, t2.q * t1.h), "scaled-second"),
    ]
    for (p, q), label in candidates:
        t = PythTriple(p, q, H)
        out.derived.append((t, label))
        if t.degenerate:
            out.degenerate.append(label)
    out.assembled = _assemble(out, split_limit)
    for item in out.assembled:
        assert lemma3_check(item.cuboid).holds
    return out


def tag_of(c: CuboidSq) -> str:
    return classify(c).tag.value
