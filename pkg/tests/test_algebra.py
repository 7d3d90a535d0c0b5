from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hybridset.algebra import (
    LaurentPoly,
    TruncatedSeries,
    pq_number,
    q_number,
    series_inv,
    series_mul,
    specialize,
)
from hybridset.errors import NotInvertibleError, NotRepresentableError
from strategies import laurent_polys

p = LaurentPoly.var("p")
q = LaurentPoly.var("q")
half = Fraction(1, 2)
sqrt_pq = LaurentPoly.monomial({"p": half, "q": half})


def test_poly_arith_examples():
    assert (1 + q) * (1 - q) == 1 - q**2
    sq = LaurentPoly.monomial({"q": half})
    assert sq * sq == q
    assert (q**-1 + 1) + (-1) == q**-1


def test_zero_coefficients_are_pruned():
    f = q + 1 - q
    assert f == 1
    assert all(c != 0 for c in (q - q + p).terms.values())
    assert (q - q).is_zero


@given(laurent_polys(), laurent_polys(), laurent_polys())
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a * 1 == a and a + 0 == a
    assert a - a == 0


def test_render_format():
    assert (1 - q**2).render() == "-q^2 + 1"
    assert LaurentPoly.monomial({"p": Fraction(3, 2), "q": half}).render() == "p^(3/2)*q^(1/2)"
    assert (q**-1).render() == "q^-1"
    assert (Fraction(1, 2) * LaurentPoly.var("x") ** 2).render() == "1/2*x^2"
    assert LaurentPoly().render() == "0"


def test_series_examples():
    one_minus_t = TruncatedSeries([1, -1], 3)
    assert list(series_inv(one_minus_t)) == [1, 1, 1, 1]
    a = LaurentPoly.var("a")
    f = TruncatedSeries([1, -a], 4)
    assert series_mul(f, series_inv(f)) == TruncatedSeries.one(4)
    assert list(series_inv(TruncatedSeries([1, -2], 2))) == [1, 2, 4]


def test_series_inverse_needs_unit():
    with pytest.raises(NotInvertibleError):
        TruncatedSeries([0, 1], 3).inverse()


@given(st.sampled_from([1, -1, 2, -2]), st.lists(st.integers(-3, 3), min_size=1, max_size=4))
def test_series_inverse_property(c0, rest):
    a = TruncatedSeries([c0] + rest, 5)
    assert a * a.inverse() == TruncatedSeries.one(5)


def test_pq_number_examples():
    assert pq_number(0) == 0
    assert pq_number(1) == sqrt_pq
    assert pq_number(2) == sqrt_pq * (p + q)
    assert pq_number(-1) == -1 / sqrt_pq


@pytest.mark.parametrize("i", range(-6, 7))
def test_pq_number_reflection_and_symmetry(i):
    assert pq_number(i) == -pq_number(-i) * p**i * q**i
    # p <-> q interchange
    flipped = LaurentPoly({tuple(sorted(({"p": "q", "q": "p"}[n], e) for n, e in m)): c
                           for m, c in pq_number(i).terms.items()})
    assert flipped == pq_number(i)


def test_pq_number_closed_form_at_rational_point():
    # sqrt(pq)(p^i - q^i)/(p - q) at p = 4, q = 9 (sqrt(pq) = 6)
    for i in range(-4, 5):
        expected = 6 * (Fraction(4) ** i - Fraction(9) ** i) / (4 - 9)
        assert pq_number(i).evaluate({"p": 4, "q": 9}) == expected


def test_specialize_examples():
    assert specialize(pq_number(3), {"p": 1, "q": 1}) == 3
    assert (1 + q).specialize({"q": 1}) == 2
    assert (p * q * (q + p)).specialize({"p": 1}) == q + q**2


def test_specialize_rejects_non_square():
    with pytest.raises(NotRepresentableError):
        LaurentPoly.monomial({"q": half}).specialize({"q": 2})
    assert LaurentPoly.monomial({"q": half}).specialize({"q": Fraction(9, 4)}) == Fraction(3, 2)


def test_q_number_is_p_specialisation():
    for i in range(-4, 5):
        assert q_number(i) == pq_number(i).specialize({"p": 1})
