"""Cuboids stored as signed squared edges, with the fourth-power and area identities.

Edges ``a, b, d``; face diagonals ``c`` (a,b), ``e`` (a,d), ``f`` (b,d); space
diagonal ``g``.  Every element is carried by its square, which may be a
non-square or even negative ("imaginary edge"); all identities here are
polynomial in the squares so they hold regardless.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .arith import int_sqrt
from .errors import DomainError

ELEMENTS = ("a", "b", "d", "c", "e", "f", "g")


@dataclass(frozen=True)
class CuboidSq:
    a2: int
    b2: int
    d2: int

    @property
    def c2(self) -> int:
        return self.a2 + self.b2

    @property
    def e2(self) -> int:
        return self.a2 + self.d2

    @property
    def f2(self) -> int:
        return self.b2 + self.d2

    @property
    def g2(self) -> int:
        return self.a2 + self.b2 + self.d2

    def squares(self) -> dict[str, int]:
        return {k: getattr(self, k + "2") for k in ELEMENTS}

    def root(self, name: str) -> Optional[int]:
        """Integer value of an element, or ``None`` if irrational or imaginary."""
        v = getattr(self, name + "2")
        return int_sqrt(v) if v >= 0 else None

    def edges(self) -> Optional[tuple[int, int, int]]:
        r = tuple(self.root(k) for k in "abd")
        return None if None in r else r

    def permuted(self, order: str) -> "CuboidSq":
        """Relabel edges, e.g. ``order="bad"`` swaps the first two."""
        vals = {"a": self.a2, "b": self.b2, "d": self.d2}
        return CuboidSq(*(vals[k] for k in order))


def cuboid_from_edges(a: int, b: int, d: int) -> CuboidSq:
    if min(a, b, d) <= 0:
        raise DomainError(f"edges must be positive: {(a, b, d)}")
    return CuboidSq(a * a, b * b, d * d)


def cuboid_from_squares(a2: int, b2: int, d2: int) -> CuboidSq:
    return CuboidSq(int(a2), int(b2), int(d2))


def parity_gate(c: CuboidSq) -> Optional[list[str]]:
    """Necessary parity/divisibility conditions for a perfect cuboid.

    Returns the list of violated clauses (empty when all hold), or ``None``
    when some edge is not an integer.  The divisibility clause asks for a face
    whose two edges and diagonal are all multiples of 3; it is tested on the
    squares (``9 | x^2``) so irrational face diagonals still get a verdict.
    """
    edges = c.edges()
    if edges is None:
        return None
    out = []
    if sum(1 for v in edges if v % 2 == 0) < 2:
        out.append("two_even_edges")
    if c.g2 % 2 == 0:
        out.append("odd_g2")
    faces = ((c.a2, c.b2, c.c2), (c.a2, c.d2, c.e2), (c.b2, c.d2, c.f2))
    if not any(all(v % 9 == 0 for v in face) for face in faces):
        out.append("face_divisible_by_3")
    return out


def prop5_check(c: CuboidSq) -> tuple[int, int]:
    """``(g^4, c^4 + e^4 + f^4 - a^4 - b^4 - d^4)``; always equal."""
    lhs = c.g2 ** 2
    rhs = c.c2 ** 2 + c.e2 ** 2 + c.f2 ** 2 - c.a2 ** 2 - c.b2 ** 2 - c.d2 ** 2
    return lhs, rhs


def heron16(p2: int, q2: int, r2: int) -> int:
    """Signed ``16 S^2`` of the triangle with squared sides ``p2, q2, r2``."""
    return (p2 + q2 + r2) ** 2 - 2 * (p2 * p2 + q2 * q2 + r2 * r2)


@dataclass(frozen=True)
class AreaReport:
    s1_16: int  # triangle on the face diagonals (c, f, e)
    s2_16: int  # triangle on the edges (a, b, d)
    g4: int

    @property
    def holds(self) -> bool:
        return self.g4 == self.s1_16 - self.s2_16


def lemma3_check(c: CuboidSq) -> AreaReport:
    s1 = heron16(c.c2, c.f2, c.e2)
    s2 = heron16(c.a2, c.b2, c.d2)
    return AreaReport(s1, s2, c.g2 ** 2)


class Tag(str, enum.Enum):
    PERFECT = "Perfect"
    EULER_BRICK = "EulerBrick"
    BODY_CUBOID = "BodyCuboid"
    EDGE_DEFECT = "EdgeDefect"
    IRREGULAR = "Irregular"
    INVALID = "Invalid"


@dataclass(frozen=True)
class CuboidClass:
    tag: Tag
    status: dict  # element name -> bool (square of a nonnegative integer)


def classify(c: CuboidSq) -> CuboidClass:
    """Tag by which elements are integers.

    ``Irregular`` covers integer edges where both the space diagonal and some
    face diagonal are irrational, i.e. boxes that are not cuboid candidates at all.
    """
    status = {k: v >= 0 and int_sqrt(v) is not None for k, v in c.squares().items()}
    if min(c.a2, c.b2, c.d2) == 0 or c.g2 <= 0:
        tag = Tag.INVALID
    elif not all(status[k] for k in "abd"):
        tag = Tag.EDGE_DEFECT
    else:
        faces = all(status[k] for k in "cef")
        if faces and status["g"]:
            tag = Tag.PERFECT
        elif faces:
            tag = Tag.EULER_BRICK
        elif status["g"]:
            tag = Tag.BODY_CUBOID
        else:
            tag = Tag.IRREGULAR
    return CuboidClass(tag, status)
