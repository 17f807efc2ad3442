"""Special Schubert varieties: input validation, strata and their invariants.

The variety is the locus of k-planes V in C^l with dim(V ∩ F) >= i for a
fixed j-plane F.  Strata are indexed p = 1..r+1 with Δ_{r+1} the whole
variety and Δ_p the locus where dim(V ∩ F) >= i_p = k - p + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

NON_SMALL = "non-small"
ALL_SMALL = "all-small"


class InvalidInputError(ValueError):
    """Raised by :func:`validate`; ``constraint`` names the failed inequality."""

    def __init__(self, message: str, constraint: str):
        super().__init__(message)
        self.constraint = constraint


@dataclass(frozen=True)
class SchubertInput:
    i: int
    j: int
    k: int
    l: int

    @property
    def r(self) -> int:
        return self.k - self.i

    @property
    def c(self) -> int:
        return self.l - self.j

    @property
    def regime(self) -> str:
        return NON_SMALL if self.c < self.k else ALL_SMALL

    @property
    def strata(self) -> range:
        return range(1, self.r + 2)

    def pairs(self) -> Iterator[tuple[int, int]]:
        """All (p, q) with 1 <= q < p <= r+1, ordered by p then q."""
        for p in self.strata:
            for q in range(1, p):
                yield p, q

    def i_p(self, p: int) -> int:
        return self.k - p + 1

    def m_p(self, p: int) -> int:
        k, j, l = self.k, self.j, self.l
        return (k + 1 - p) * (j + p - k - 1) + (p - 1) * (l - k)

    @property
    def n(self) -> int:
        return self.m_p(self.r + 1)

    def k_pq(self, p: int, q: int) -> int:
        return (p - q) * (self.k + 1 - p)

    def d_pq(self, p: int, q: int) -> int:
        return (p - q) * (self.c + 1 - q)

    def delta_pq(self, p: int, q: int) -> int:
        return (p - q) * (self.k - self.c + q - p)

    def kbar_pq(self, p: int, q: int) -> int:
        return (p - q) * (self.c - p + 1)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.i, self.j, self.k, self.l)

    def __str__(self) -> str:
        return f"({self.i},{self.j},{self.k},{self.l})"


def validate(i: int, j: int, k: int, l: int) -> SchubertInput:
    if not 0 < i:
        raise InvalidInputError(f"0 < i violated (i={i})", "0<i")
    if not i < k:
        raise InvalidInputError(f"i < k violated (i={i}, k={k})", "i<k")
    if not k <= j:
        raise InvalidInputError(f"k <= j violated (k={k}, j={j})", "k<=j")
    if not j < l:
        raise InvalidInputError(f"j < l violated (j={j}, l={l})", "j<l")
    r, c = k - i, l - j
    if not r < c:
        raise InvalidInputError(f"r < c violated: r:=k-i< l-j=:c fails (r={r}, c={c})", "r<c")
    return SchubertInput(i, j, k, l)


def valid_inputs(max_l: int) -> list[SchubertInput]:
    """Every valid (i,j,k,l) with l <= max_l, sorted by (l, k, j, i)."""
    out = []
    for l in range(1, max_l + 1):
        for k in range(1, l):
            for j in range(k, l):
                for i in range(1, k):
                    if k - i < l - j:
                        out.append(SchubertInput(i, j, k, l))
    return out


@dataclass(frozen=True)
class StratumRow:
    p: int
    i_p: int
    m_p: int


@dataclass(frozen=True)
class StratumTable:
    rows: tuple[StratumRow, ...]
    n: int

    def __getitem__(self, p: int) -> StratumRow:
        return self.rows[p - 1]


@dataclass(frozen=True)
class PairRow:
    p: int
    q: int
    k: int
    d: int
    delta: int
    kbar: int


@dataclass(frozen=True)
class PairTable:
    rows: tuple[PairRow, ...]

    def __getitem__(self, pq: tuple[int, int]) -> PairRow:
        for row in self.rows:
            if (row.p, row.q) == pq:
                return row
        raise KeyError(pq)


def stratum_invariants(inp: SchubertInput) -> StratumTable:
    rows = tuple(StratumRow(p, inp.i_p(p), inp.m_p(p)) for p in inp.strata)
    return StratumTable(rows, inp.n)


def pair_invariants(inp: SchubertInput) -> PairTable:
    return PairTable(tuple(
        PairRow(p, q, inp.k_pq(p, q), inp.d_pq(p, q), inp.delta_pq(p, q), inp.kbar_pq(p, q))
        for p, q in inp.pairs()
    ))


def xi_pair_small(inp: SchubertInput, p: int, q: int) -> bool:
    kbar = inp.kbar_pq(p, q)
    return kbar < inp.m_p(p) - inp.m_p(q) - kbar


def pi_pair_small(inp: SchubertInput, p: int, q: int) -> bool:
    return inp.delta_pq(p, q) < 0


@dataclass(frozen=True)
class SmallnessReport:
    p: int
    xi_small: bool
    pi_small: bool
    pi_semismall: bool


def resolution_smallness(inp: SchubertInput) -> list[SmallnessReport]:
    out = []
    for p in inp.strata:
        qs = range(1, p)
        out.append(SmallnessReport(
            p,
            xi_small=all(xi_pair_small(inp, p, q) for q in qs),
            pi_small=all(pi_pair_small(inp, p, q) for q in qs),
            pi_semismall=all(inp.delta_pq(p, q) <= 0 for q in qs),
        ))
    return out


@dataclass(frozen=True)
class FiberDescriptor:
    kind: str
    a: int
    b: int

    @property
    def dim(self) -> int:
        return self.a * (self.b - self.a)

    def __str__(self) -> str:
        return f"{self.kind} = Gr({self.a}, C^{self.b})"


def fiber_descriptors(inp: SchubertInput, p: int, q: int | None = None) -> list[FiberDescriptor]:
    """F_p, and with q also F_pq and G_pq, as Grassmannian parameters."""
    if p not in inp.strata:
        raise IndexError(f"stratum p={p} outside 1..{inp.r + 1}")
    out = [FiberDescriptor("F_p", inp.i, inp.i_p(p))]
    if q is not None:
        if not 1 <= q < p:
            raise IndexError(f"need 1 <= q < p, got q={q}, p={p}")
        out.append(FiberDescriptor("F_pq", inp.i_p(p), inp.i_p(q)))
        out.append(FiberDescriptor("G_pq", p - q, inp.c - q + 1))
    return out


def geometry_json(inp: SchubertInput) -> dict:
    return {
        "input": {"i": inp.i, "j": inp.j, "k": inp.k, "l": inp.l, "r": inp.r, "c": inp.c,
                  "regime": inp.regime},
        "strata": [{"p": row.p, "i_p": row.i_p, "m_p": row.m_p} for row in stratum_invariants(inp).rows],
        "pairs": [
            {"p": row.p, "q": row.q, "k": row.k, "d": row.d, "delta": row.delta, "kbar": row.kbar,
             "xi_small": xi_pair_small(inp, row.p, row.q), "pi_small": pi_pair_small(inp, row.p, row.q)}
            for row in pair_invariants(inp).rows
        ],
    }
