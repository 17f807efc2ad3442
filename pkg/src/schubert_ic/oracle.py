"""Brute-force oracles, kept free of the engine's enumeration code."""

from __future__ import annotations

import itertools
from collections import Counter

from .partitions import EnumerationLimitError, Partition, enum_limit
from .poly import LaurentPoly
from .schur import RingSpec, lr_multiply, lr_product, sigma

MonomialVector = Counter  # exponent tuple -> coefficient


def schur_monomial_expand(lam: Partition, nvars: int, limit: int | None = None) -> MonomialVector:
    """Monomial expansion of s_lam(x_1..x_nvars) as a sum over SSYT."""
    lam = Partition(lam)
    if len(lam) > nvars:
        return Counter()
    limit = enum_limit() if limit is None else limit
    if nvars * lam.weight > limit:
        raise EnumerationLimitError(f"nvars*|lam| = {nvars * lam.weight} exceeds {limit}")
    cells = [(r, c) for r, length in enumerate(lam) for c in range(length)]
    out: Counter = Counter()
    filling: dict[tuple[int, int], int] = {}

    def rec(idx):
        if idx == len(cells):
            expo = [0] * nvars
            for v in filling.values():
                expo[v - 1] += 1
            out[tuple(expo)] += 1
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, filling[r, c - 1])
        if r > 0:
            lo = max(lo, filling[r - 1, c] + 1)
        for v in range(lo, nvars + 1):
            filling[r, c] = v
            rec(idx + 1)
        filling.pop((r, c), None)

    rec(0)
    return out


def monomial_multiply(a: MonomialVector, b: MonomialVector) -> MonomialVector:
    out: Counter = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return Counter({e: c for e, c in out.items() if c})


def is_symmetric(vec: MonomialVector) -> bool:
    return all(vec.get(perm, 0) == c for e, c in vec.items() for perm in set(itertools.permutations(e)))


def brute_product_check(spec: RingSpec, lam: Partition, mu: Partition, limit: int | None = None) -> bool:
    """Check lr_multiply(sigma_lam, sigma_mu) against monomial expansions.

    The untruncated LR expansion must match (x-expansion of s_lam)*(s_mu) in
    ``spec.rows`` variables, and every term dropped by truncation must have
    first part larger than ``spec.cols``.
    """
    n = spec.rows
    lhs = monomial_multiply(schur_monomial_expand(lam, n, limit), schur_monomial_expand(mu, n, limit))
    full = lr_product(lam, mu)
    rhs: Counter = Counter()
    for nu, coeff in full.items():
        for e, c in schur_monomial_expand(nu, n, limit).items():
            rhs[e] += coeff * c
    rhs = Counter({e: c for e, c in rhs.items() if c})
    if lhs != rhs:
        return False
    truncated = lr_multiply(spec, sigma(spec, lam), sigma(spec, mu))
    for nu, coeff in full.items():
        if len(nu) > n:
            continue  # vanishes in n variables
        if nu in truncated.terms:
            if truncated.terms[nu] != coeff:
                return False
        elif nu.part(0) <= spec.cols:
            return False
    return all(nu in full for nu in truncated.terms)


def gaussian_by_enumeration(a: int, b: int, limit: int | None = None) -> LaurentPoly:
    """Sum of t^(2|lam|) over lam in the a x (b-a) box, by brute force."""
    if a < 0 or b < 0 or a > b:
        return LaurentPoly()
    cols = b - a
    limit = enum_limit() if limit is None else limit
    if a * cols > limit:
        raise EnumerationLimitError(f"box {a}x{cols} exceeds {limit}")
    counts: Counter = Counter()
    # nonincreasing a-tuples with entries in 0..cols
    for parts in itertools.combinations_with_replacement(range(cols, -1, -1), a):
        counts[2 * sum(parts)] += 1
    return LaurentPoly(counts)
