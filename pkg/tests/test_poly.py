from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from shadowpoly.poly import (
    K, ONE, ZERO, RationalPoly, binomial_poly, falling_factorial, format_human, format_json,
    parse_poly, poly_arith, poly_eval, poly_format,
)

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=12)
polys = st.lists(fractions, max_size=6).map(RationalPoly)


def test_arithmetic_examples():
    assert (K * K - K) + K == K * K
    assert (K - 1) * (K - 2) == RationalPoly([2, -3, 1])
    assert (K * K - K).scale(Fraction(1, 2)) == RationalPoly([0, Fraction(-1, 2), Fraction(1, 2)])
    assert poly_arith(K, ONE, "add") == K + 1
    with pytest.raises(ValueError):
        poly_arith(K, K, "div")


def test_evaluation_examples():
    assert poly_eval(K * (K - 1) ** 2, 3) == 12
    assert poly_eval(ZERO, 17) == 0
    diamonds = parse_poly("k^8 - 10k^7 + 41k^6 - 88k^5 + 104k^4 - 64k^3 + 16k^2")
    assert diamonds(2) == 0


def test_format_examples():
    half = RationalPoly([0, Fraction(-1, 2), Fraction(1, 2)])
    assert format_human(half) == "1/2k^2 - 1/2k"
    assert format_json(K * K) == ["0/1", "0/1", "1/1"]
    assert format_human(ZERO) == "0"
    assert format_human(falling_factorial(3)) == "k^3 - 3k^2 + 2k"
    assert poly_format(K, "json") == '["0/1", "1/1"]'
    assert format_human(RationalPoly([-3])) == "-3"


def test_parse_accepts_both_formats_and_loose_spacing():
    assert parse_poly('["0/1", "1/1"]') == K
    assert parse_poly(["1", "0", "2"]) == RationalPoly([1, 0, 2])
    assert parse_poly("3k^2-k+1") == RationalPoly([1, -1, 3])
    assert parse_poly("-k") == -K
    with pytest.raises(ValueError):
        parse_poly("k^2 + x")


def test_degree_and_zero():
    assert ZERO.degree == float("-inf")
    assert ZERO.is_zero() and not ONE.is_zero()
    assert RationalPoly([1, 2, 0, 0]).degree == 1
    assert binomial_poly(K, 2) == K * (K - 1) / 2


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(polys, polys, st.integers(-20, 20))
def test_evaluation_is_a_homomorphism(a, b, k):
    assert poly_eval(a * b, k) == poly_eval(a, k) * poly_eval(b, k)
    assert poly_eval(a + b, k) == poly_eval(a, k) + poly_eval(b, k)


@given(polys)
def test_format_parse_roundtrip(p):
    assert parse_poly(format_human(p)) == p
    assert parse_poly(format_json(p)) == p
    assert all(isinstance(c, Fraction) for c in p.coeffs)
