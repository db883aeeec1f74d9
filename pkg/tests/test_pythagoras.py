from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from ratcuboid.arith import Surd
from ratcuboid.errors import DegenerateError, DomainError, IncompatibleRadicandError, NotCoherentError, PoleError
from ratcuboid.pythagoras import (
    GeneratorPair,
    HyperbolicParams,
    PythTriple,
    generator_pairs,
    hyperbolic_params,
    prop1_check,
    ratio_params,
    triple_from_pair,
    triples_up_to,
    verify_param14,
    verify_param15,
)

rats = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)
pos = st.integers(min_value=1, max_value=500)


@st.composite
def triples(draw):
    m = draw(st.integers(min_value=2, max_value=300))
    n = draw(st.integers(min_value=1, max_value=m - 1))
    k = draw(st.integers(min_value=1, max_value=10))
    return PythTriple(k * 2 * m * n, k * (m * m - n * n), k * (m * m + n * n))


def test_triple_validation():
    with pytest.raises(DomainError):
        PythTriple(3, 4, 6)
    with pytest.raises(DomainError):
        PythTriple(-3, 4, 5)
    assert PythTriple(3, 4, 5).is_primitive and not PythTriple(6, 8, 10).is_primitive


def test_generator_pairs_345():
    first, second = generator_pairs(PythTriple(4, 3, 5))
    assert (first.x, first.y) == (Surd(2), Surd(1))
    assert (second.x, second.y) == (Surd(Fraction(3, 2), 2), Surd(Fraction(1, 2), 2))


def test_generator_pairs_worked():
    first, _ = generator_pairs(PythTriple(104, 672, 680))
    assert (first.x, first.y) == (Surd(26), Surd(2))
    first, second = generator_pairs(PythTriple(240, 44, 244))
    assert (first.x, first.y) == (Surd(12), Surd(10))
    assert (second.x, second.y) == (Surd(11, 2), Surd(1, 2))


def test_generator_pairs_zero_leg():
    with pytest.raises(DegenerateError):
        generator_pairs(PythTriple(0, 5, 5))


@pytest.mark.parametrize("x, y, t", [(2, 1, (4, 3, 5)), (13, 4, (104, 153, 185))])
def test_triple_from_pair(x, y, t):
    assert tuple(triple_from_pair(GeneratorPair.of(x, y))) == t


def test_triple_from_degenerate_pair():
    g = GeneratorPair.of(1, 1)
    assert g.degenerate
    assert tuple(triple_from_pair(g)) == (2, 0, 2)


@pytest.mark.parametrize("t, value", [
    ((4, 3, 5), Fraction(75, 2)), ((104, 672, 680), 693600), ((240, 44, 244), 89304),
])
def test_fourth_power_sum_examples(t, value):
    assert prop1_check(PythTriple(*t)) == value


@given(triples())
def test_fourth_power_sum_property(t):
    assert prop1_check(t) == Fraction(3, 2) * t.h ** 2
    for g in generator_pairs(t):
        assert g.x2 - g.y2 in (t.p, t.q) or g.y2 - g.x2 in (t.p, t.q)
        assert g.x2 + g.y2 == t.h


def test_ratio_params_worked():
    rp = ratio_params(GeneratorPair.of(2, 26), GeneratorPair.of(13, 4))
    assert (rp.t, rp.k) == (Fraction(13, 2), 2)
    assert 2 * rp.t * rp.k == 26


def test_ratio_params_self():
    p = GeneratorPair.of(5, 3)
    rp = ratio_params(p, p)
    assert rp.t == 1 and rp.t * rp.k == Fraction(3, 5)


def test_ratio_params_errors():
    with pytest.raises(IncompatibleRadicandError):
        ratio_params(GeneratorPair.of(12, 10), GeneratorPair(Surd(8, 3), Surd(5, 3)))
    with pytest.raises(NotCoherentError):
        ratio_params(GeneratorPair.of(2, 3), GeneratorPair.of(1, 1))


def test_hyperbolic_worked():
    h = hyperbolic_params(GeneratorPair.of(12, 10), GeneratorPair.of(11, 2))
    assert (h.a1, h.ch, h.sh_sq, h.m_sq) == (Fraction(1, 11), Fraction(11, 2), Fraction(117, 4), Fraction(1, 2))
    h = hyperbolic_params(GeneratorPair.of(26, 2), GeneratorPair.of(26, 2))
    assert (h.a1, h.ch, h.m_sq) == (Fraction(6, 7), 13, Fraction(78, 7))


def test_hyperbolic_degenerate():
    h = hyperbolic_params(GeneratorPair.of(3, 3), GeneratorPair.of(11, 2))
    assert h.a1 == 0 and h.m_sq == 0 and h.degenerate


@given(rats, rats)
def test_hyperbolic_invariants(a1, ch):
    assert HyperbolicParams.from_a1_ch(a1, ch).invariants_hold()


def test_ch_param_examples():
    assert verify_param14(1, 1)
    assert verify_param14(2, Fraction(121, 4))
    with pytest.raises(DomainError):
        verify_param14(1, Fraction(1, 2))


def test_a1_param_examples():
    assert verify_param15(1, 0)
    assert verify_param15(12, Fraction(1, 11))
    with pytest.raises(PoleError):
        verify_param15(1, 1)


@given(rats, st.fractions(min_value=1, max_value=1000, max_denominator=1000))
def test_ch_param_property(y, ch_sq):
    assert verify_param14(y, ch_sq)


@given(rats, rats)
def test_a1_param_property(y, a1):
    assume(a1 != 1)
    assert verify_param15(y, a1)


def test_triples_up_to():
    prim = list(triples_up_to(30))
    assert all(t.is_primitive and t.h <= 30 for t in prim)
    assert {t.h for t in prim} == {5, 13, 17, 25, 29}
    assert len(list(triples_up_to(30, primitive=False))) > len(prim)
