from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schubert_ic.oracle import gaussian_by_enumeration
from schubert_ic.poly import (
    ONE,
    ZERO,
    LaurentPoly,
    evaluate_at_one,
    gaussian_binomial,
    grassmannian_poincare,
    is_palindromic,
    parse_poly,
    poly_add,
    poly_mul,
    poly_scale,
    poly_shift,
)

polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentPoly)


def T(*coeffs, step=2):
    return LaurentPoly.from_dense(coeffs, step=step)


def test_ring_examples():
    a = LaurentPoly({0: 1, 2: 1})
    assert poly_mul(a, a) == LaurentPoly({0: 1, 2: 2, 4: 1})
    assert poly_shift(a, -2) == LaurentPoly({-2: 1, 0: 1})
    assert poly_add(a, poly_scale(a, -1)) == ZERO
    assert poly_add(a, -a).is_zero()


def test_canonical_form():
    p = LaurentPoly([(2, 1), (2, -1), (0, 3)])
    assert p.terms() == [(0, 3)]
    assert LaurentPoly({3: 0}) == ZERO
    assert hash(LaurentPoly({1: 2, 0: 1})) == hash(LaurentPoly({0: 1, 1: 2}))


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * ONE == a


@given(polys, st.integers(-5, 5))
def test_evaluation_is_homomorphism(a, x):
    if x == 0:
        return
    from fractions import Fraction
    assert (a * a)(Fraction(x)) == a(Fraction(x)) ** 2


@given(polys)
def test_text_and_json_roundtrip(a):
    assert parse_poly(str(a)) == a
    assert LaurentPoly.from_json(a.to_json()) == a


def test_text_form():
    assert str(LaurentPoly({0: 1, 2: 2, 4: 1})) == "1 + 2*t^2 + t^4"
    assert str(LaurentPoly({-2: 1, 0: 1})) == "t^-2 + 1"
    assert str(LaurentPoly({1: -1, 3: -3})) == "-t - 3*t^3"
    assert str(ZERO) == "0"
    assert LaurentPoly({-2: 1, 4: 1}).to_json() == [[-2, 1], [4, 1]]


@pytest.mark.parametrize("n, k, expected", [
    (2, 1, T(1, 1)),
    (4, 2, T(1, 1, 2, 1, 1)),
    (1, 2, ZERO),
    (3, 0, ONE),
    (3, 3, ONE),
    (3, -1, ZERO),
])
def test_gaussian_binomial(n, k, expected):
    assert gaussian_binomial(n, k, 2) == expected


def test_gaussian_step():
    assert gaussian_binomial(4, 2, 1) == T(1, 1, 2, 1, 1, step=1)


@pytest.mark.parametrize("a, b, expected", [
    (4, 5, T(1, 1, 1, 1, 1)),
    (2, 6, T(1, 1, 2, 2, 3, 2, 2, 1, 1)),
    (0, 7, ONE),
])
def test_grassmannian_poincare(a, b, expected):
    # expected values come from enumerating the a x (b-a) box
    assert gaussian_by_enumeration(a, b) == expected
    got = grassmannian_poincare(a, b)
    assert got == expected
    assert got.max_degree == 2 * a * (b - a)


def test_pascal_recurrence():
    for step in (1, 2, 3):
        for n in range(1, 13):
            for k in range(0, n + 1):
                lhs = gaussian_binomial(n, k, step)
                rhs = gaussian_binomial(n - 1, k - 1, step) + gaussian_binomial(n - 1, k, step).shift(step * k)
                assert lhs == rhs


def test_gaussian_matches_enumeration():
    for n in range(0, 11):
        for k in range(0, n + 1):
            assert gaussian_binomial(n, k, 2) == gaussian_by_enumeration(k, n)


def test_gaussian_at_one_and_palindromic():
    for n in range(0, 13):
        for k in range(0, n + 1):
            g = gaussian_binomial(n, k, 2)
            assert evaluate_at_one(g) == comb(n, k)
            assert g(1) == comb(n, k)
            assert is_palindromic(g, k * (n - k))


def test_gaussian_large_n_no_recursion_error():
    g = gaussian_binomial(1500, 2, 1)
    assert evaluate_at_one(g) == comb(1500, 2)


@pytest.mark.parametrize("P, center, expected", [
    (T(1, 1, 1), 2, True),
    (LaurentPoly({0: 1, 2: 2}), 1, False),
    (grassmannian_poincare(2, 6), 8, True),
    (LaurentPoly({-2: 1, 2: 1}), 0, True),
])
def test_is_palindromic(P, center, expected):
    assert is_palindromic(P, center) is expected
