import pytest
from hypothesis import given
from hypothesis import strategies as st

from knotmosaic.laurent import DELTA, ONE, A, LaurentPoly

polys = st.dictionaries(st.integers(-12, 12), st.integers(-5, 5), max_size=6).map(LaurentPoly)
units = st.builds(lambda e, s: LaurentPoly({e: s}), st.integers(-8, 8), st.sampled_from([1, -1]))


def test_zero_coefficients_are_dropped():
    p = LaurentPoly({3: 0, -1: 2})
    assert p.terms == ((-1, 2),)
    assert LaurentPoly({}) == LaurentPoly({0: 0})


def test_format():
    assert LaurentPoly({-4: -1, -3: 1}).format("A") == "-1*A^-4 + 1*A^-3"
    assert LaurentPoly({}).format("t") == "0"
    assert ONE.format("A") == "1*A^0"


@given(polys)
def test_format_parse_round_trip(p):
    assert LaurentPoly.parse(p.format("A"), "A") == p


def test_delta():
    assert DELTA == -(A**2) - A ** (-2)
    assert DELTA(1) == -2


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == LaurentPoly({})
    assert p * ONE == p


@given(polys, polys)
def test_mirror_is_ring_automorphism(p, q):
    assert (p * q).mirror() == p.mirror() * q.mirror()
    assert p.mirror().mirror() == p


@given(units, st.integers(-4, 4))
def test_unit_powers(u, k):
    assert u**k * u ** (-k) == ONE


def test_nonunit_negative_power_rejected():
    with pytest.raises(ValueError):
        (ONE + A) ** -1


@given(polys, st.integers(-3, 3))
def test_evaluation_is_homomorphism(p, x):
    if x == 0:
        return
    from fractions import Fraction

    assert (p * p)(Fraction(x)) == p(Fraction(x)) ** 2


def test_substitute_power():
    assert LaurentPoly({-4: 1, 8: -2}).substitute_power(-4) == LaurentPoly({1: 1, -2: -2})
    with pytest.raises(ValueError):
        LaurentPoly({2: 1}).substitute_power(-4)


def test_hashable_and_immutable():
    assert len({LaurentPoly({1: 1}), LaurentPoly({1: 1})}) == 1


def test_unsupported_operand():
    with pytest.raises(TypeError):
        ONE + "x"
