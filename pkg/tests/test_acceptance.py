"""Acceptance criteria 1-11 at their stated tolerances.

Run ``pytest tests/test_acceptance.py`` (or this file directly); the terminal
summary prints one PASS/FAIL line per criterion.
"""
import random
import sys
import time
from fractions import Fraction
from math import gcd

import pytest

from ratcuboid import published
from ratcuboid.arith import Surd, is_square
from ratcuboid.cli import curves_report
from ratcuboid.cuboid import Tag, classify, cuboid_from_squares, lemma3_check, prop5_check
from ratcuboid.curves import CuboidSystem, quartic_leg_sides, first_curves, on_curve, product_identities, quartic_sum, second_curve
from ratcuboid.generators import euler_brick, multiply_triangles
from ratcuboid.identities import CHECKS, FLOAT_CHECKS, rand_real_cuboid, run_check
from ratcuboid.pythagoras import GeneratorPair, PythTriple, hyperbolic_params
from ratcuboid.search import SearchConfig, enumerate_euler_bricks, to_csv, verify_no_perfect
from ratcuboid.trig import face_angles, lemma4_check, lemma5_angles, relabel_for_real_angles


@pytest.mark.criterion(1)
def test_c1_first_family_points():
    system = CuboidSystem(104, 672, 153)
    entries = first_curves(system["p1"], system["p2"])
    assert {e.curve.N for e in entries} == {-28305, 28817, 456992, -456960}
    for (s, N), (x, y) in zip([(1, -28305), (-1, 28817), (-1, 456992), (1, -456960)],
                              [(169, 208), (16, 676), (4, 1352), (676, 104)]):
        curve = [e.curve for e in entries if (e.curve.s, e.curve.N) == (s, N)][0]
        assert curve.rhs(x) == y * y


@pytest.mark.criterion(2)
def test_c2_second_family():
    system = CuboidSystem(240, 44, 117)
    h = hyperbolic_params(system["p1"], system["p3"])
    assert (h.a1, h.ch, h.sh_sq, h.m_sq) == (Fraction(1, 11), Fraction(11, 2), Fraction(117, 4), Fraction(1, 2))
    sc = second_curve(h)
    assert (sc.int_curve.s, sc.int_curve.N) == (1, -14157)
    assert sc.int_point.x == 121 and sc.int_point.y == Surd(242)
    assert on_curve(sc.int_curve, sc.int_point)


@pytest.mark.criterion(3)
def test_c3_quartic_sum_and_product():
    p1, p2 = GeneratorPair.of(2, 26), GeneratorPair.of(13, 4)
    assert 2 ** 4 + 26 ** 4 + 13 ** 4 + 4 ** 4 == 697 ** 2 == quartic_sum(p1, p2)
    ids = product_identities(p1, p2, 697 ** 2)
    assert ids.via_x1 == ((16 + 28561) * (16 + 256), 485809 * 16)
    assert ids.via_x1[0] == ids.via_x1[1]


@pytest.mark.criterion(4)
@pytest.mark.parametrize("item", published.AREA_ITEMS, ids=lambda it: it.key)
@pytest.mark.parametrize("part", ["s1", "s2", "identity"])
def test_c4_area_golden(item, part):
    c = cuboid_from_squares(*item.squares)
    rep = lemma3_check(c)
    assert c.g2 == item.g2
    if part == "s1":
        assert rep.s1_16 == item.s1_16
    elif part == "s2":
        assert rep.s2_16 == item.s2_16
    else:
        assert rep.s1_16 - rep.s2_16 == c.g2 ** 2 == prop5_check(c)[0]
        if item.g2 == 697 ** 2:
            assert c.g2 ** 2 == 236010384481


@pytest.mark.criterion(5)
def test_c5_obstruction_sweep():
    t0 = time.perf_counter()
    for x in range(1, 201):
        for y in range(1, 201):
            if gcd(x, y) != 1 or (x - y) % 2 == 0:
                continue
            assert not is_square(x ** 4 + y ** 4)
            lhs, rhs = quartic_leg_sides(x, y)
            assert lhs == rhs
    assert time.perf_counter() - t0 < 30


@pytest.mark.criterion(6)
def test_c6_euler_polynomials():
    for n in range(2, 13):
        b = euler_brick(n)
        st = classify(b.cuboid).status
        assert st["c"] and st["e"] and st["f"]
    b = euler_brick(2)
    assert set(b.edges) == {44, 117, 240}
    assert sorted((b.cuboid.c2, b.cuboid.e2, b.cuboid.f2)) == [125 ** 2, 244 ** 2, 267 ** 2]


@pytest.mark.criterion(7)
def test_c7_triangle_multiplication():
    t0 = time.perf_counter()
    prod = multiply_triangles(PythTriple(9, 40, 41), PythTriple(8, 15, 17))
    legs = {tuple(sorted((t.p, t.q))) for t, _ in prod.derived}
    assert legs == {(455, 528), (185, 672), (153, 680), (328, 615)}
    assert all(t.h == 697 for t, _ in prod.derived)
    keys = {c.key for c in prod.assembled}
    for item in published.AREA_ITEMS[:4]:
        assert tuple(sorted(item.squares)) in keys
    assert time.perf_counter() - t0 < 5


EXACT = [n for n in CHECKS if n not in FLOAT_CHECKS]
_c8_clock = {"t": 0.0}


@pytest.mark.criterion(8)
@pytest.mark.parametrize("name", EXACT)
def test_c8_identity_suites(name):
    t0 = time.perf_counter()
    res = run_check(name, 10 ** 4, seed=0)
    _c8_clock["t"] += time.perf_counter() - t0
    assert res.failures == 0, res.first_failure_seed
    assert _c8_clock["t"] < 60


@pytest.mark.criterion(9)
def test_c9_float_angle_checks():
    t0 = time.perf_counter()
    rng = random.Random(9)
    cuboids = [rand_real_cuboid(rng) for _ in range(100)]
    cuboids.append(relabel_for_real_angles(44 ** 2, 117 ** 2, 240 ** 2))
    for c in cuboids:
        f = face_angles(c)
        assert lemma4_check(f, 1e-12)
        lemma5_angles(f, 1e-12)
    assert time.perf_counter() - t0 < 5


@pytest.mark.criterion(10)
def test_c10_search():
    t0 = time.perf_counter()
    hits = enumerate_euler_bricks(SearchConfig(300))
    assert (44, 117, 240) in [(h.a, h.b, h.d) for h in hits]
    assert all(h.tag == Tag.EULER_BRICK.value for h in hits)
    assert verify_no_perfect(SearchConfig(300)).perfect == []
    assert to_csv(hits) == to_csv(enumerate_euler_bricks(SearchConfig(300, shards=8)))
    assert time.perf_counter() - t0 < 120


@pytest.mark.criterion(11)
def test_c11_erratum_flagged():
    system = CuboidSystem(240, 44, 117)
    pt = [e.point for e in first_curves(system["p1"], system["p2"])
          if e.curve.N == 42489 and e.point.x == 192][0]
    assert pt.y_sq == 1080000
    report = curves_report(240, 44, 117)
    flagged = [e for e in report.errata if "108000 " in e and "1080000" in e and "inconsistent" in e]
    assert flagged
    assert report.exit_code == 0


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
