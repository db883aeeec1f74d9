"""Squared hyperbolic/circular values attached to cuboid faces and diagonals.

Face angles (exact, any labelling; signs may be negative):

    ch^2 alpha = b^2/(b^2 - a^2)   sh^2 alpha = a^2/(b^2 - a^2)
    ch^2 beta  = d^2/(d^2 - a^2)   sh^2 beta  = a^2/(d^2 - a^2)
    ch^2 gamma = b^2/(b^2 - d^2)   sh^2 gamma = d^2/(b^2 - d^2)

Real angles need ``a < d < b``; the floating checks run in mpmath.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .cuboid import CuboidSq
from .errors import DomainError, PoleError, SingularityError

# ~133 bits, comfortably past the 80-bit floor
WORK_DPS = 40


@dataclass(frozen=True)
class FaceAngles:
    ch2_alpha: Fraction
    sh2_alpha: Fraction
    ch2_beta: Fraction
    sh2_beta: Fraction
    ch2_gamma: Fraction
    sh2_gamma: Fraction

    def pairs(self):
        return (
            (self.ch2_alpha, self.sh2_alpha),
            (self.ch2_beta, self.sh2_beta),
            (self.ch2_gamma, self.sh2_gamma),
        )


def _ratio(num: int, den: int) -> Fraction:
    if den == 0:
        raise PoleError("equal squared edges give a pole")
    return Fraction(num, den)


def face_angles(c: CuboidSq) -> FaceAngles:
    a2, b2, d2 = c.a2, c.b2, c.d2
    return FaceAngles(
        _ratio(b2, b2 - a2), _ratio(a2, b2 - a2),
        _ratio(d2, d2 - a2), _ratio(a2, d2 - a2),
        _ratio(b2, b2 - d2), _ratio(d2, b2 - d2),
    )


def prop6_check(f: FaceAngles) -> Fraction:
    """``th^2 alpha * cth^2 beta * cth^2 gamma``; exactly 1 for any cuboid."""
    if 0 in (f.sh2_beta, f.sh2_gamma, f.ch2_alpha):
        raise PoleError("zero in a denominator of th/cth")
    return (f.sh2_alpha / f.ch2_alpha) * (f.ch2_beta / f.sh2_beta) * (f.ch2_gamma / f.sh2_gamma)


def face_angle_edge_product(c: CuboidSq) -> Fraction:
    """The same product written directly on the squares: ``(a^2/b^2)(d^2/a^2)(b^2/d^2)``."""
    if 0 in (c.a2, c.b2, c.d2):
        raise PoleError("zero squared edge")
    return Fraction(c.a2, c.b2) * Fraction(c.d2, c.a2) * Fraction(c.b2, c.d2)


def relabel_for_real_angles(a2: int, b2: int, d2: int) -> CuboidSq:
    """Order the squares so that ``a < d < b``."""
    lo, mid, hi = sorted((a2, b2, d2))
    return CuboidSq(lo, hi, mid)


def real_angles(f: FaceAngles) -> tuple:
    """``(alpha, beta, gamma)`` as mpmath numbers at ``WORK_DPS``."""
    for ch2, _ in f.pairs():
        if ch2 < 1:
            raise DomainError(f"ch^2 = {ch2} < 1: complex angle, relabel so that a < d < b")
    with mpmath.workdps(WORK_DPS):
        return tuple(
            mpmath.acosh(mpmath.sqrt(mpmath.mpf(ch2.numerator) / ch2.denominator))
            for ch2, _ in f.pairs()
        )


def _rel_close(lhs, rhs, tol) -> bool:
    return abs(lhs - rhs) <= tol * abs(rhs)


@dataclass(frozen=True)
class ExpRelationResult:
    lhs: mpmath.mpf
    rhs: mpmath.mpf
    rel_err: mpmath.mpf
    passed: bool


def exp_relation_eval(f: FaceAngles, tol: float = 1e-12) -> ExpRelationResult:
    """``e^(2a+2b) + e^(2a+2g)`` against ``e^(2b+2g) + 1``."""
    if tol <= 0:
        raise DomainError("tol must be positive")
    al, be, ga = real_angles(f)
    with mpmath.workdps(WORK_DPS):
        lhs = mpmath.exp(2 * al + 2 * be) + mpmath.exp(2 * al + 2 * ga)
        rhs = mpmath.exp(2 * be + 2 * ga) + 1
        err = abs(lhs - rhs) / abs(rhs)
        return ExpRelationResult(lhs, rhs, err, _rel_close(lhs, rhs, tol))


def lemma4_check(f: FaceAngles, tol: float = 1e-12) -> bool:
    return exp_relation_eval(f, tol).passed


def recover_angles(f: FaceAngles) -> tuple:
    """Each angle recomputed from the other two.

        2 alpha = ln[ch(beta + gamma) / ch(beta - gamma)]
        2 beta  = ln[sh(alpha + gamma) / sh(gamma - alpha)]
        2 gamma = ln[sh(alpha + beta)  / sh(beta - alpha)]

    For real angles ``alpha`` is the smallest, so the sh differences are
    written as ``gamma - alpha`` and ``beta - alpha`` to keep the log argument
    positive; the opposite order gives the same magnitude with a minus sign.
    """
    al, be, ga = real_angles(f)
    with mpmath.workdps(WORK_DPS):
        s_ga = mpmath.sinh(ga - al)
        s_be = mpmath.sinh(be - al)
        if s_ga == 0:
            raise SingularityError("sh(alpha - gamma) = 0")
        if s_be == 0:
            raise SingularityError("sh(alpha - beta) = 0")
        alpha = mpmath.log(mpmath.cosh(be + ga) / mpmath.cosh(be - ga)) / 2
        beta = mpmath.log(mpmath.sinh(al + ga) / s_ga) / 2
        gamma = mpmath.log(mpmath.sinh(al + be) / s_be) / 2
        return (alpha, beta, gamma), (al, be, ga)


def lemma5_angles(f: FaceAngles, tol: float = 1e-12) -> tuple:
    """Recovered ``(alpha, beta, gamma)``; raises if any disagrees with the direct value beyond ``tol``."""
    if tol <= 0:
        raise DomainError("tol must be positive")
    recovered, direct = recover_angles(f)
    for name, r, d in zip(("alpha", "beta", "gamma"), recovered, direct):
        if not _rel_close(r, d, tol):
            raise ArithmeticError(f"{name}: recovered {r} vs direct {d}")
    return recovered


def diag_angles(c: CuboidSq) -> dict[str, Fraction]:
    g2 = c.g2
    if g2 <= 0:
        raise DomainError("g^2 must be positive")
    return {
        "cos2_theta": Fraction(c.c2, g2), "sin2_theta": Fraction(c.d2, g2),
        "cos2_eps": Fraction(c.b2, g2), "sin2_eps": Fraction(c.e2, g2),
        "cos2_delta": Fraction(c.f2, g2), "sin2_delta": Fraction(c.a2, g2),
    }


def diag_angles_check(c: CuboidSq) -> tuple[Fraction, Fraction]:
    """``(cos^2 theta + sin^2 eps + cos^2 delta, sin^2 theta + cos^2 eps + sin^2 delta)`` = ``(2, 1)``."""
    v = diag_angles(c)
    return (
        v["cos2_theta"] + v["sin2_eps"] + v["cos2_delta"],
        v["sin2_theta"] + v["cos2_eps"] + v["sin2_delta"],
    )
