from collections import Counter

import pytest

from conftest import P, all_partitions
from schubert_ic.oracle import (
    brute_product_check,
    gaussian_by_enumeration,
    is_symmetric,
    schur_monomial_expand,
)
from schubert_ic.partitions import EnumerationLimitError
from schubert_ic.poly import LaurentPoly
from schubert_ic.schur import RingSpec


def test_schur_expand_examples():
    assert schur_monomial_expand(P(1), 2) == Counter({(1, 0): 1, (0, 1): 1})
    assert schur_monomial_expand(P(2), 2) == Counter({(2, 0): 1, (1, 1): 1, (0, 2): 1})
    assert schur_monomial_expand(P(1, 1), 2) == Counter({(1, 1): 1})
    assert schur_monomial_expand(P(1, 1, 1), 2) == Counter()


def test_schur_expand_limit():
    with pytest.raises(EnumerationLimitError):
        schur_monomial_expand(P(5, 5), 3, limit=20)


def test_schur_expand_symmetric():
    for n in range(1, 4):
        for w in range(7):
            for lam in all_partitions(w):
                if len(lam) <= n:
                    assert is_symmetric(schur_monomial_expand(lam, n))


def test_kostka_total_counts():
    # s_(2,1)(x1,x2,x3) has 8 SSYT
    assert sum(schur_monomial_expand(P(2, 1), 3).values()) == 8


@pytest.mark.parametrize("spec, lam, mu", [
    (RingSpec(2, 2), P(1), P(1)),
    (RingSpec(1, 3), P(2), P(2)),
    (RingSpec(2, 2), P(2, 2), P(1)),
])
def test_brute_product_examples(spec, lam, mu):
    assert brute_product_check(spec, lam, mu)


@pytest.mark.parametrize("a, b, expected", [
    (1, 2, {0: 1, 2: 1}),
    (2, 4, {0: 1, 2: 1, 4: 2, 6: 1, 8: 1}),
    (3, 3, {0: 1}),
])
def test_gaussian_by_enumeration(a, b, expected):
    assert gaussian_by_enumeration(a, b) == LaurentPoly(expected)


def test_gaussian_by_enumeration_limit():
    with pytest.raises(EnumerationLimitError):
        gaussian_by_enumeration(9, 18, limit=64)
