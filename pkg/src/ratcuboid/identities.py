"""Randomised exact checks of every polynomial identity in the package.

Each check draws its own random instance from a seeded ``random.Random`` and
returns True/False.  :func:`run_suite` tallies failures.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .arith import Surd
from .cuboid import CuboidSq, lemma3_check, prop5_check
from .curves import quartic_leg_sides, kt_identity, lemma2_equivalence, prop4_check, product_identities
from .pythagoras import (
    GeneratorPair,
    HyperbolicParams,
    PythTriple,
    prop1_check,
    ratio_params,
    verify_param14,
    verify_param15,
)
from .trig import diag_angles_check, face_angles, lemma4_check, lemma5_angles, prop6_check


def rand_rat(rng: random.Random, hi: int = 10 ** 4, positive: bool = False) -> Fraction:
    num = rng.randint(1, hi)
    if not positive and rng.random() < 0.5:
        num = -num
    return Fraction(num, rng.randint(1, hi))


def rand_triple(rng: random.Random, hi: int = 300) -> PythTriple:
    while True:
        m, n = rng.randint(2, hi), rng.randint(1, hi)
        if n < m:
            break
    k = rng.randint(1, 20)
    return PythTriple(k * 2 * m * n, k * (m * m - n * n), k * (m * m + n * n))


def rand_surd_pair(rng: random.Random) -> GeneratorPair:
    d = rng.choice([1, 1, 2, 3, 5, 6, 7])
    return GeneratorPair(Surd(rand_rat(rng, 500, True), d), Surd(rand_rat(rng, 500, True), d))


def rand_coherent(rng: random.Random) -> tuple[GeneratorPair, GeneratorPair]:
    """Two pairs with equal ``xy``; the second shares the first's radicand so ratios stay rational."""
    p1 = rand_surd_pair(rng)
    x2 = p1.x * rand_rat(rng, 500, True)
    y2 = Surd(p1.xy) / x2
    return p1, GeneratorPair(x2, y2)


def rand_signed_squares(rng: random.Random, hi: int = 10 ** 7) -> CuboidSq:
    return CuboidSq(*(rng.randint(-hi, hi) for _ in range(3)))


def rand_distinct_positive(rng: random.Random, hi: int = 10 ** 6) -> CuboidSq:
    vals = rng.sample(range(1, hi), 3)
    return CuboidSq(*vals)


def rand_real_cuboid(rng: random.Random, hi: int = 10 ** 4) -> CuboidSq:
    """Integer edges with ``a < d < b`` so every face angle is real."""
    a, d, b = sorted(rng.sample(range(1, hi), 3))
    return CuboidSq(a * a, b * b, d * d)


# -- individual checks --------------------------------------------------------

def chk_fourth_power_sum(rng):
    t = rand_triple(rng)
    return prop1_check(t) == Fraction(3, 2) * t.h ** 2


def chk_ch_param(rng):
    ch_sq = 1 + abs(rand_rat(rng))
    return verify_param14(rand_rat(rng), ch_sq)


def chk_a1_param(rng):
    a1 = rand_rat(rng)
    if a1 == 1:
        a1 = Fraction(2)
    return verify_param15(rand_rat(rng), a1)


def chk_ratio_reconstruction(rng):
    p1, p2 = rand_coherent(rng)
    rp = ratio_params(p1, p2)
    return rp.reproduces(p1, p2) and p1.y == p2.y * rp.t


def chk_product_identities(rng):
    p1, p2 = rand_coherent(rng)
    g2 = p1.quartic() + p2.quartic()
    ids = product_identities(p1, p2, g2)
    return ids.via_x1[0] == ids.via_x1[1] and ids.via_x2[0] == ids.via_x2[1]


def chk_quartic_leg(rng):
    lhs, rhs = quartic_leg_sides(rng.randint(1, 10 ** 6), rng.randint(1, 10 ** 6))
    return lhs == rhs


def chk_unit_gap(rng):
    ch_sq = 1 + abs(rand_rat(rng))
    return prop4_check(ch_sq, ch_sq - 1).holds


def chk_kt(rng):
    return all(kt_identity(rand_rat(rng), rand_rat(rng)))


def rand_hyperbolic(rng) -> HyperbolicParams:
    a1 = rand_rat(rng)
    while a1 in (0, 1):
        a1 = rand_rat(rng)
    return HyperbolicParams.from_a1_ch(a1, rand_rat(rng))


def chk_sh4(rng):
    h = rand_hyperbolic(rng)
    rep = lemma2_equivalence(h, s=rand_rat(rng, 100, True))
    return rep.sh4_holds and rep.edge_sum_holds


def chk_hyperbolic_invariants(rng):
    return rand_hyperbolic(rng).invariants_hold()


def chk_fourth_power_diagonal(rng):
    lhs, rhs = prop5_check(rand_signed_squares(rng))
    return lhs == rhs


def chk_heron_difference(rng):
    return lemma3_check(rand_signed_squares(rng)).holds


def chk_face_angle_product(rng):
    return prop6_check(face_angles(rand_distinct_positive(rng))) == 1


def chk_face_angle_gap(rng):
    c = rand_signed_squares(rng)
    if len({c.a2, c.b2, c.d2}) < 3:
        return True
    return all(ch - sh == 1 for ch, sh in face_angles(c).pairs())


def chk_diagonal_angle_sums(rng):
    c = CuboidSq(*(rng.randint(1, 10 ** 7) for _ in range(3)))
    return diag_angles_check(c) == (2, 1)


def chk_exp_relation(rng):
    return lemma4_check(face_angles(rand_real_cuboid(rng)), 1e-12)


def chk_angle_recovery(rng):
    try:
        lemma5_angles(face_angles(rand_real_cuboid(rng)), 1e-12)
    except ArithmeticError:
        return False
    return True


CHECKS: dict[str, tuple[str, Callable]] = {
    "fourth-power-sum": ("x1^4 + y1^4 + x11^4 + y11^4 = 3/2 c^2", chk_fourth_power_sum),
    "ch-parametrisation": ("4y^4 ch^2 + y^4 sh^4 = y^4 (1 + ch^2)^2", chk_ch_param),
    "a1-parametrisation": ("a1 = (x - y)/(x + y) triple", chk_a1_param),
    "ratio-reconstruction": ("x2 = x1 t, y2 = x1 k, y1 = x1 t k", chk_ratio_reconstruction),
    "hyperbolic-invariants": ("ch^2 - sh^2 = 1, m^4 = a1^2 ch^2", chk_hyperbolic_invariants),
    "product-identities": ("(x1^4 + x2^4)(x1^4 + y2^4) = g^2 x1^4", chk_product_identities),
    "quartic-leg": ("y^8 + 4x^4(x^4 + y^4) = (2x^4 + y^4)^2", chk_quartic_leg),
    "unit-gap": ("1 + 4 sh^2 ch^2 = (sh^2 + ch^2)^2", chk_unit_gap),
    "kt-identity": ("k^4 t^2 = t^2 (k^4 + t^4) - t^6", chk_kt),
    "sh4-equation": ("sh^4 = ((m^4 - a1^2)/a1^2)^2", chk_sh4),
    "fourth-power-diagonal": ("g^4 = c^4 + e^4 + f^4 - a^4 - b^4 - d^4", chk_fourth_power_diagonal),
    "heron-difference": ("g^4 = 16 S1^2 - 16 S2^2", chk_heron_difference),
    "face-angle-product": ("th^2 alpha cth^2 beta cth^2 gamma = 1", chk_face_angle_product),
    "face-angle-gap": ("ch^2 - sh^2 = 1 per face", chk_face_angle_gap),
    "diagonal-angle-sums": ("cos^2 theta + sin^2 eps + cos^2 delta = 2", chk_diagonal_angle_sums),
    "exp-angle-relation": ("e^(2a+2b) + e^(2a+2g) = e^(2b+2g) + 1", chk_exp_relation),
    "angle-recovery": ("2 alpha = ln[ch(b+g)/ch(b-g)] and cyclic", chk_angle_recovery),
}

FLOAT_CHECKS = {"exp-angle-relation", "angle-recovery"}

SUITES = {
    "pythagoras": ["fourth-power-sum", "ch-parametrisation", "a1-parametrisation",
                   "ratio-reconstruction", "hyperbolic-invariants"],
    "cuboid": ["fourth-power-diagonal", "heron-difference"],
    "curves": ["product-identities", "quartic-leg", "unit-gap", "kt-identity", "sh4-equation"],
    "trig": ["face-angle-product", "face-angle-gap", "diagonal-angle-sums",
             "exp-angle-relation", "angle-recovery"],
}
SUITES["all"] = [name for names in SUITES.values() for name in names]


@dataclass
class SuiteResult:
    name: str
    formula: str
    samples: int
    failures: int
    first_failure_seed: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0


def run_check(name: str, samples: int, seed: int = 0) -> SuiteResult:
    formula, fn = CHECKS[name]
    fails, where = 0, []
    for i in range(samples):
        rng = random.Random(f"{seed}:{name}:{i}")
        if not fn(rng):
            fails += 1
            if len(where) < 3:
                where.append(i)
    return SuiteResult(name, formula, samples, fails, where)


def run_suite(suite: str, samples: int, seed: int = 0, float_samples: int | None = None) -> list[SuiteResult]:
    """Run every check of ``suite``; float checks use ``float_samples`` (default: ``min(samples, 100)``)."""
    if suite not in SUITES:
        raise KeyError(suite)
    if float_samples is None:
        float_samples = min(samples, 100)
    return [
        run_check(n, float_samples if n in FLOAT_CHECKS else samples, seed)
        for n in SUITES[suite]
    ]
