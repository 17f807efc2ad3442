"""Schur-basis cohomology ring of a Grassmannian.

The ring H*(Gr(rows, C^(rows+cols))) has basis sigma_lambda for lambda in
the rows x cols rectangle; products are computed by the Littlewood-Richardson
rule and truncated to the rectangle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .partitions import EMPTY, Partition, PartitionError, Rectangle, contains, partitions_in


class RingMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class RingSpec:
    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"bad ring {self.rows}x{self.cols}")

    @property
    def rect(self) -> Rectangle:
        return Rectangle(self.rows, self.cols)

    @property
    def top_weight(self) -> int:
        return self.rows * self.cols

    def fits(self, lam: Partition) -> bool:
        return contains(self.rect, lam)

    def basis(self, weight: int | None = None) -> list[Partition]:
        out = partitions_in(self.rect, limit=max(self.top_weight, 0))
        if weight is None:
            return out
        return [lam for lam in out if lam.weight == weight]

    def check(self, lam: Partition) -> Partition:
        if not self.fits(lam):
            raise PartitionError(f"{lam or '()'} does not fit the {self.rows}x{self.cols} rectangle")
        return lam


def _sort_key(lam: Partition):
    # weight ascending, then lexicographically descending
    return (lam.weight, tuple(-x for x in lam), -len(lam))


class SchurVector:
    """Integer combination of Schur classes inside one ring."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: RingSpec, terms: Mapping[Partition, int] | Iterable = ()):
        self.spec = spec
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Partition, int] = {}
        for lam, a in items:
            lam = spec.check(Partition(lam))
            acc[lam] = acc.get(lam, 0) + a
        self.terms = {lam: acc[lam] for lam in sorted(acc, key=_sort_key) if acc[lam]}

    @classmethod
    def basis(cls, spec: RingSpec, lam: Partition) -> SchurVector:
        return cls(spec, {lam: 1})

    def coeff(self, lam: Partition) -> int:
        return self.terms.get(Partition(lam), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        return len({lam.weight for lam in self.terms}) <= 1

    def _same(self, other: SchurVector):
        if self.spec != other.spec:
            raise RingMismatchError(f"{self.spec} vs {other.spec}")

    def __add__(self, other: SchurVector) -> SchurVector:
        self._same(other)
        out = dict(self.terms)
        for lam, a in other.terms.items():
            out[lam] = out.get(lam, 0) + a
        return SchurVector(self.spec, out)

    def scale(self, n: int) -> SchurVector:
        return SchurVector(self.spec, {lam: n * a for lam, a in self.terms.items()})

    def __mul__(self, other: SchurVector) -> SchurVector:
        return lr_multiply(self.spec, self, other)

    def __eq__(self, other):
        if not isinstance(other, SchurVector):
            return NotImplemented
        return self.spec == other.spec and self.terms == other.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for lam, a in self.terms.items():
            cls = f"σ_({lam})"
            parts.append(cls if a == 1 else f"{a}·{cls}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SchurVector({self.spec}, {self.terms!r})"


def _horizontal_strips(lam: Partition, m: int, max_rows: int | None = None):
    """All nu with nu/lam a horizontal strip of m boxes."""
    n = len(lam) + 1 if max_rows is None else min(len(lam) + 1, max_rows)
    base = list(lam) + [0]

    def rec(i, remaining, prefix):
        if i == n:
            if remaining == 0:
                yield Partition(prefix)
            return
        lo = base[i]
        hi = lo + remaining if i == 0 else min(base[i - 1], lo + remaining)
        for x in range(lo, hi + 1):
            prefix.append(x)
            yield from rec(i + 1, remaining - (x - lo), prefix)
            prefix.pop()

    if n == 0:
        if m == 0:
            yield lam
        return
    yield from rec(0, m, [])


def _vertical_strips(lam: Partition, m: int, max_rows: int | None = None):
    n = len(lam) + m if max_rows is None else min(len(lam) + m, max_rows)
    base = list(lam) + [0] * (n - len(lam))

    def rec(i, remaining, prefix):
        if i == n:
            if remaining == 0:
                yield Partition(prefix)
            return
        for add in (0, 1):
            if add > remaining:
                continue
            x = base[i] + add
            if i and x > prefix[-1]:
                continue
            prefix.append(x)
            yield from rec(i + 1, remaining - add, prefix)
            prefix.pop()

    yield from rec(0, m, [])


def pieri_row(spec: RingSpec, lam: Partition, m: int) -> SchurVector:
    """sigma_lam * sigma_(m) by horizontal strips, truncated."""
    spec.check(lam)
    return SchurVector(spec, {nu: 1 for nu in _horizontal_strips(lam, m, spec.rows) if spec.fits(nu)})


def pieri_column(spec: RingSpec, lam: Partition, m: int) -> SchurVector:
    """sigma_lam * sigma_(1^m) by vertical strips, truncated."""
    spec.check(lam)
    return SchurVector(spec, {nu: 1 for nu in _vertical_strips(lam, m, spec.rows) if spec.fits(nu)})


def lr_product(lam: Partition, mu: Partition, max_rows: int | None = None) -> dict[Partition, int]:
    """Untruncated s_lam * s_mu as {nu: c^nu_{lam,mu}}.

    Counts LR tableaux of shape nu/lam and content mu: label a fills a
    horizontal strip of mu_a boxes, and the reading word (rows top to bottom,
    right to left) must be a lattice word.  ``max_rows`` drops shapes with
    more rows, which is harmless because rows only grow.
    """
    out: dict[Partition, int] = {}
    if max_rows is not None and len(lam) > max_rows:
        return out
    if len(mu) == 0:
        if max_rows is None or len(lam) <= max_rows:
            out[Partition(lam)] = 1
        return out

    # counts[i][a] = number of label a in row i of the skew part
    def place(a, shape, counts):
        if a == len(mu):
            nu = Partition(shape)
            out[nu] = out.get(nu, 0) + 1
            return
        cur = Partition(shape)
        for nu in _horizontal_strips(cur, mu[a], max_rows):
            padded = list(nu)
            old = list(cur) + [0] * (len(padded) - len(cur))
            rows = len(padded)
            new_counts = [list(c) for c in counts] + [[0] * len(mu) for _ in range(rows - len(counts))]
            ok = True
            above_prev = 0
            above_cur = 0
            for i in range(rows):
                added = padded[i] - old[i]
                new_counts[i][a] = added
                if a > 0:
                    # label a in rows 0..i must not exceed label a-1 in rows 0..i-1
                    above_cur += added
                    if above_cur > above_prev:
                        ok = False
                        break
                    above_prev += new_counts[i][a - 1]
            if ok:
                place(a + 1, padded, new_counts)

    place(0, list(lam), [[0] * len(mu) for _ in range(len(lam))])
    return out


def lr_multiply(spec: RingSpec, u: SchurVector, v: SchurVector) -> SchurVector:
    if u.spec != spec or v.spec != spec:
        raise RingMismatchError("operands must share the ring")
    out: dict[Partition, int] = {}
    for lam, a in u.terms.items():
        for mu, b in v.terms.items():
            for nu, c in lr_product(lam, mu, spec.rows).items():
                if spec.fits(nu):
                    out[nu] = out.get(nu, 0) + a * b * c
    return SchurVector(spec, out)


def multiply_by_full_rectangle(spec: RingSpec, lam: Partition, a: int) -> SchurVector:
    """sigma_lam * sigma_(a^rows): a single shifted class, or zero."""
    spec.check(lam)
    if a < 0:
        raise ValueError("a must be nonnegative")
    if lam.part(0) + a > spec.cols:
        return SchurVector(spec)
    return SchurVector(spec, {Partition(x + a for x in lam.padded(spec.rows)): 1})


def lefschetz_power_matrix(spec: RingSpec, i: int) -> tuple[list[Partition], list[Partition], list[list[int]]]:
    """Matrix of cup product by sigma_(1)^i from weight (N-i)/2 to (N+i)/2.

    Returns ``(source_basis, target_basis, M)`` with ``M[t][s]`` the
    coefficient of target t in the image of source s; N = rows*cols.
    Parity mismatch gives empty bases and an empty matrix.
    """
    N = spec.top_weight
    if i < 0 or i > N or (N - i) % 2:
        return [], [], []
    lo, hi = (N - i) // 2, (N + i) // 2
    src = spec.basis(lo)
    tgt = spec.basis(hi)
    cols = []
    for lam in src:
        vec = {lam: 1}
        for _ in range(i):
            nxt: dict[Partition, int] = {}
            for mu, a in vec.items():
                for nu in pieri_row(spec, mu, 1).terms:
                    nxt[nu] = nxt.get(nu, 0) + a
            vec = nxt
        cols.append([vec.get(nu, 0) for nu in tgt])
    M = [[cols[s][t] for s in range(len(src))] for t in range(len(tgt))]
    return src, tgt, M


def matrix_rank_exact(M: list[list[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    A = [list(map(int, row)) for row in M]
    if not A or not A[0]:
        return 0
    nrows, ncols = len(A), len(A[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if A[r][col] != 0), None)
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        piv = A[rank][col]
        for r in range(rank + 1, nrows):
            for c2 in range(col + 1, ncols):
                A[r][c2] = (piv * A[r][c2] - A[r][col] * A[rank][c2]) // prev
            A[r][col] = 0
        prev = piv
        rank += 1
        if rank == nrows:
            break
    return rank


def is_full_rank_square(M: list[list[int]]) -> bool:
    if not M:
        return True
    if any(len(row) != len(M) for row in M):
        return False
    return matrix_rank_exact(M) == len(M)


def sigma(spec: RingSpec, lam: Partition | Iterable[int] = EMPTY) -> SchurVector:
    return SchurVector.basis(spec, spec.check(Partition(lam)))
