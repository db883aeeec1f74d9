import pytest
from hypothesis import given, strategies as st

from ratcuboid.cuboid import (
    Tag,
    classify,
    cuboid_from_edges,
    cuboid_from_squares,
    heron16,
    lemma3_check,
    parity_gate,
    prop5_check,
)
from ratcuboid.errors import DomainError

signed = st.integers(min_value=-10 ** 9, max_value=10 ** 9)


def test_from_edges_body():
    c = cuboid_from_edges(104, 672, 153)
    assert (c.c2, c.e2, c.f2, c.g2) == (462400, 34225, 474993, 485809)
    assert c.root("g") == 697 and c.root("f") is None


def test_from_edges_brick():
    c = cuboid_from_edges(240, 44, 117)
    assert c.g2 == 73225 and c.root("g") is None


def test_unit_cube():
    c = cuboid_from_edges(1, 1, 1)
    assert (c.c2, c.e2, c.f2, c.g2) == (2, 2, 2, 3)
    assert not any(classify(c).status[k] for k in "cefg")


def test_nonpositive_edge():
    with pytest.raises(DomainError):
        cuboid_from_edges(0, 1, 2)


def test_signed_squares_item4():
    c = cuboid_from_squares(-183616, 462400, 207025)
    assert (c.c2, c.e2, c.f2, c.g2) == (278784, 23409, 669425, 485809)
    assert c.edges() is None


def test_zero_squares_invalid():
    assert classify(cuboid_from_squares(0, 0, 0)).tag is Tag.INVALID


def test_item3_unsigned_is_a_different_box():
    c = cuboid_from_squares(344000, 451584, 378225)
    assert c.g2 == 1173809 and c.c2 == 795584
    assert cuboid_from_squares(-344000, 451584, 378225).g2 == 697 ** 2


def test_parity_gate():
    assert parity_gate(cuboid_from_edges(104, 672, 153)) == []
    assert "odd_g2" in parity_gate(cuboid_from_edges(2, 2, 2))
    v = parity_gate(cuboid_from_edges(44, 240, 117))
    assert "two_even_edges" not in v and "odd_g2" not in v
    assert parity_gate(cuboid_from_squares(-183616, 462400, 207025)) is None


@pytest.mark.parametrize("squares, g", [((104 ** 2, 672 ** 2, 153 ** 2), 697), ((520 ** 2, 618849, 576 ** 2), 1105)])
def test_fourth_power_diagonal_examples(squares, g):
    lhs, rhs = prop5_check(cuboid_from_squares(*squares))
    assert lhs == rhs == g ** 4


def test_heron16():
    assert heron16(25, 16, 9) == 576
    assert heron16(462400, 474993, 34225) == 62834616576
    assert heron16(10816, 451584, 23409) == -173175767905


@pytest.mark.parametrize("squares, s1, s2", [
    ((328 ** 2, 171200, 455 ** 2), 304534553600, 68524169119),
    ((448 ** 2, 264 ** 2, 975 ** 2), 1084149063936, -406752986689),
])
def test_heron_difference_examples(squares, s1, s2):
    rep = lemma3_check(cuboid_from_squares(*squares))
    assert (rep.s1_16, rep.s2_16) == (s1, s2)
    assert rep.holds


@given(signed, signed, signed)
def test_fourth_power_and_heron(a2, b2, d2):
    c = cuboid_from_squares(a2, b2, d2)
    lhs, rhs = prop5_check(c)
    assert lhs == rhs == c.g2 ** 2
    assert lemma3_check(c).holds


@given(signed, signed, signed)
def test_permutation_keeps_g2(a2, b2, d2):
    c = cuboid_from_squares(a2, b2, d2)
    for order in ("abd", "bda", "dab", "adb"):
        assert c.permuted(order).g2 == c.g2


@pytest.mark.parametrize("edges, tag", [
    ((44, 117, 240), Tag.EULER_BRICK),
    ((104, 672, 153), Tag.BODY_CUBOID),
    ((3, 4, 5), Tag.IRREGULAR),
])
def test_classify(edges, tag):
    assert classify(cuboid_from_edges(*edges)).tag is tag


def test_classify_edge_defect():
    assert classify(cuboid_from_squares(328 ** 2, 171200, 455 ** 2)).tag is Tag.EDGE_DEFECT
