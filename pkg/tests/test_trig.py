from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from ratcuboid.cuboid import CuboidSq, cuboid_from_edges
from ratcuboid.errors import DomainError, PoleError
from ratcuboid.trig import (
    diag_angles_check,
    face_angles,
    lemma4_check,
    exp_relation_eval,
    lemma5_angles,
    prop6_check,
    face_angle_edge_product,
    real_angles,
    recover_angles,
    relabel_for_real_angles,
)

BRICK = relabel_for_real_angles(44 ** 2, 240 ** 2, 117 ** 2)
distinct = st.lists(st.integers(1, 10 ** 8), min_size=3, max_size=3, unique=True)


def test_relabel_brick():
    assert (BRICK.a2, BRICK.d2, BRICK.b2) == (1936, 13689, 57600)


def test_face_angles_brick():
    f = face_angles(BRICK)
    assert f.ch2_alpha == Fraction(57600, 55664)
    assert all(ch >= 1 for ch, _ in f.pairs())


def test_face_angles_pole():
    with pytest.raises(PoleError):
        face_angles(CuboidSq(4, 4, 9))


def test_face_angle_product_examples():
    assert prop6_check(face_angles(BRICK)) == 1
    body = cuboid_from_edges(104, 672, 153)
    assert prop6_check(face_angles(body)) == 1 == face_angle_edge_product(body)


def test_face_angle_product_zero_edge():
    with pytest.raises(PoleError):
        prop6_check(face_angles(CuboidSq(0, 4, 9)))


@given(distinct)
def test_face_angle_product_property(sq):
    c = CuboidSq(*sq)
    f = face_angles(c)
    assert prop6_check(f) == 1
    assert all(ch - sh == 1 for ch, sh in f.pairs())


@given(st.lists(st.integers(-10 ** 8, 10 ** 8), min_size=3, max_size=3, unique=True))
def test_unit_gap_signed(sq):
    assert all(ch - sh == 1 for ch, sh in face_angles(CuboidSq(*sq)).pairs())


def test_exp_relation_examples():
    assert lemma4_check(face_angles(BRICK))
    body = relabel_for_real_angles(104 ** 2, 672 ** 2, 153 ** 2)
    res = exp_relation_eval(face_angles(body))
    assert res.passed and res.rel_err < mpmath.mpf(10) ** -30


def test_exp_relation_needs_real_angles():
    with pytest.raises(DomainError):
        lemma4_check(face_angles(CuboidSq(57600, 1936, 13689)))


def test_angle_recovery_brick():
    rec = lemma5_angles(face_angles(BRICK))
    direct = real_angles(face_angles(BRICK))
    assert all(abs(r - d) < 1e-30 for r, d in zip(rec, direct))


def test_angle_recovery_symmetric_beta_gamma():
    # beta = gamma: d^2/(d^2 - a^2) = b^2/(b^2 - d^2)
    c = CuboidSq(1, 4, 2)
    f = face_angles(c)
    assert f.ch2_beta == f.ch2_gamma == 2
    (alpha, _, _), (al, _, _) = recover_angles(f)
    assert abs(alpha - al) < 1e-30


@given(st.lists(st.integers(1, 10 ** 4), min_size=3, max_size=3, unique=True))
def test_real_angle_property(edges):
    a, d, b = sorted(edges)
    f = face_angles(CuboidSq(a * a, b * b, d * d))
    assert lemma4_check(f, 1e-12)
    lemma5_angles(f, 1e-12)


def test_diag_angles():
    assert diag_angles_check(CuboidSq(1, 1, 1)) == (2, 1)
    with pytest.raises(DomainError):
        diag_angles_check(CuboidSq(-5, 1, 1))


@given(st.lists(st.integers(1, 10 ** 9), min_size=3, max_size=3))
def test_diag_angles_property(sq):
    assert diag_angles_check(CuboidSq(*sq)) == (2, 1)
