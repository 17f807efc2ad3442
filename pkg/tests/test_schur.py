import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import P
from schubert_ic.oracle import brute_product_check
from schubert_ic.partitions import Partition, PartitionError, conjugate
from schubert_ic.schur import (
    RingMismatchError,
    RingSpec,
    SchurVector,
    is_full_rank_square,
    lefschetz_power_matrix,
    lr_multiply,
    lr_product,
    matrix_rank_exact,
    multiply_by_full_rectangle,
    pieri_column,
    pieri_row,
    sigma,
)

R22 = RingSpec(2, 2)
R13 = RingSpec(1, 3)


def vec(spec, *terms):
    return SchurVector(spec, {Partition(lam): c for lam, c in terms})


def small_rings(max_rows=3, max_cols=3):
    return [RingSpec(a, b) for a in range(1, max_rows + 1) for b in range(1, max_cols + 1)]


@pytest.mark.parametrize("lam, m, expected", [
    (P(1), 1, [((2,), 1), ((1, 1), 1)]),
    (P(2, 1), 1, [((2, 2), 1)]),
    (P(2, 2), 1, []),
])
def test_pieri_row(lam, m, expected):
    assert pieri_row(R22, lam, m) == vec(R22, *expected)


@pytest.mark.parametrize("lam, m, expected", [
    (P(), 2, [((1, 1), 1)]),
    (P(1), 1, [((2,), 1), ((1, 1), 1)]),
    (P(1, 1), 2, [((2, 2), 1)]),
])
def test_pieri_column(lam, m, expected):
    assert pieri_column(R22, lam, m) == vec(R22, *expected)


def test_pieri_rejects_outside():
    with pytest.raises(PartitionError):
        pieri_row(R22, P(3), 1)


def test_lr_examples():
    s1 = sigma(R22, [1])
    assert lr_multiply(R22, s1, s1) == vec(R22, ((2,), 1), ((1, 1), 1))
    s11 = sigma(R22, [1, 1])
    assert lr_multiply(R22, s11, s11) == vec(R22, ((2, 2), 1))
    v = vec(R22, ((2,), 3), ((1, 1), -1))
    assert lr_multiply(R22, sigma(R22), v) == v
    assert lr_product(P(1, 1), P(1, 1)) == {P(2, 2): 1, P(2, 1, 1): 1, P(1, 1, 1, 1): 1}


def test_lr_known_coefficient():
    # the smallest LR coefficient equal to 2
    assert lr_product(P(2, 1), P(2, 1))[P(3, 2, 1)] == 2


def test_lr_spec_mismatch():
    with pytest.raises(RingMismatchError):
        lr_multiply(R22, sigma(R22), sigma(R13))


def test_str():
    assert str(lr_multiply(R22, sigma(R22, [1]), sigma(R22, [1]))) == "σ_(2) + σ_(1,1)"
    assert str(lr_multiply(R22, sigma(R22, [2, 2]), sigma(R22, [1]))) == "0"
    assert str(vec(R22, ((2,), 2))) == "2·σ_(2)"


def test_pieri_lr_consistency():
    for spec in small_rings(3, 4):
        for lam in spec.basis():
            for m in range(0, spec.cols + 1):
                assert lr_multiply(spec, sigma(spec, lam), sigma(spec, [m] if m else [])) == pieri_row(spec, lam, m)
            for m in range(0, spec.rows + 1):
                assert lr_multiply(spec, sigma(spec, lam), sigma(spec, [1] * m)) == pieri_column(spec, lam, m)


def test_lr_symmetric_under_conjugation():
    for lam in RingSpec(3, 3).basis():
        for mu in RingSpec(2, 2).basis():
            left = lr_product(lam, mu)
            right = lr_product(conjugate(lam), conjugate(mu))
            assert {conjugate(nu): c for nu, c in left.items()} == right


def test_commutative_associative():
    spec = RingSpec(2, 3)
    basis = spec.basis()
    for a in basis:
        for b in basis:
            sa, sb = sigma(spec, a), sigma(spec, b)
            assert sa * sb == sb * sa
            for c in basis[:6]:
                sc = sigma(spec, c)
                assert (sa * sb) * sc == sa * (sb * sc)


def test_brute_product_all_pairs_3x3():
    for spec in small_rings(3, 3):
        for lam in spec.basis():
            for mu in spec.basis():
                assert brute_product_check(spec, lam, mu), (spec, lam, mu)


@pytest.mark.parametrize("spec, lam, a, expected", [
    (R13, P(1), 2, [((3,), 1)]),
    (R13, P(2), 2, []),
    (R13, P(), 0, [((), 1)]),
])
def test_multiply_by_full_rectangle(spec, lam, a, expected):
    assert multiply_by_full_rectangle(spec, lam, a) == vec(spec, *expected)


def test_full_rectangle_via_lr():
    for spec in small_rings(3, 3):
        for a in range(0, 3):
            if a > spec.cols:
                continue
            rect = sigma(spec, [a] * spec.rows if a else [])
            for lam in spec.basis():
                got = multiply_by_full_rectangle(spec, lam, a)
                assert got == lr_multiply(spec, sigma(spec, lam), rect)
                # injective exactly on lam_1 <= cols - a; image has all parts >= a
                assert got.is_zero() == (lam.part(0) > spec.cols - a)
                for nu in got.terms:
                    assert all(x >= a for x in nu.padded(spec.rows))


def test_lefschetz_examples():
    src, tgt, M = lefschetz_power_matrix(RingSpec(1, 1), 1)
    assert (src, tgt, M) == ([P()], [P(1)], [[1]])
    src, tgt, M = lefschetz_power_matrix(R22, 2)
    assert (src, tgt, M) == ([P(1)], [P(2, 1)], [[2]])
    src, tgt, M = lefschetz_power_matrix(R22, 0)
    assert src == tgt == [P(2), P(1, 1)]
    assert M == [[1, 0], [0, 1]]
    assert lefschetz_power_matrix(R22, 1) == ([], [], [])


def test_hard_lefschetz_small_rings():
    for rows in range(1, 13):
        for cols in range(0, 13):
            spec = RingSpec(rows, cols)
            if spec.top_weight > 12:
                continue
            for i in range(spec.top_weight + 1):
                src, tgt, M = lefschetz_power_matrix(spec, i)
                assert len(src) == len(tgt)
                assert is_full_rank_square(M)


def test_basis_count_duality():
    for spec in small_rings(4, 4):
        N = spec.top_weight
        for w in range(N + 1):
            assert len(spec.basis(w)) == len(spec.basis(N - w))


@pytest.mark.parametrize("M, rank", [
    ([[2]], 1),
    ([[1, 1], [1, 1]], 1),
    ([[0, 0], [0, 0]], 0),
    ([[0, 1, 2], [0, 2, 4], [1, 0, 0]], 2),
    ([], 0),
])
def test_rank_examples(M, rank):
    assert matrix_rank_exact(M) == rank


def test_rank_of_lefschetz_2x2():
    _, _, M = lefschetz_power_matrix(R22, 2)
    assert matrix_rank_exact(M) == 1


@settings(max_examples=200)
@given(st.integers(1, 5).flatmap(lambda n: st.integers(1, 5).flatmap(
    lambda m: st.lists(st.lists(st.integers(-3, 3), min_size=m, max_size=m), min_size=n, max_size=n))))
def test_rank_matches_sympy(M):
    assert matrix_rank_exact(M) == sympy.Matrix(M).rank()
