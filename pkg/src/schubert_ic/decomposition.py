"""Decomposition data for the resolutions of a special Schubert variety.

Everything here is bookkeeping on graded spaces indexed by partitions:

* ``A_pq``: cohomology of the fiber F_pq, rectangle (p-q) x i_p
* ``D_pq``: the sub-Grassmannian Gr(p-q, C^(k-c)), rectangle (p-q) x (k-c+q-p),
  zero when delta_pq < 0
* ``E_pq``: image of D_pq under the top Chern class, D basis raised by c+1-q
* ``B_pq``: stalk of IC along Δ_q, rectangle (p-q) x (c-p+1)

Perverse summands are (support stratum, multiplicity, shift) records whose
multiplicities are weight counts in the D rectangles.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import poly as _poly
from .geometry import SchubertInput, pi_pair_small, xi_pair_small
from .partitions import (
    EMPTY,
    ClassificationError,
    EnumerationLimitError,
    Partition,
    PartitionError,
    Rectangle,
    add_to_parts,
    classify_stratum,
    contains,
    enumerate_by_weight,
    gysin_compose,
    gysin_split,
    partitions_in,
)
from .poly import ONE, ZERO, LaurentPoly
from .schur import RingSpec, is_full_rank_square, lefschetz_power_matrix

KINDS = ("A", "B", "D", "E")


class SmallnessError(RuntimeError):
    pass


def _gr(a: int, b: int) -> LaurentPoly:
    # looked up through the module so fault injection in tests reaches every caller
    return _poly.grassmannian_poincare(a, b)


@dataclass(frozen=True)
class GradedSpaceId:
    kind: str
    p: int
    q: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown graded space kind {self.kind!r}")
        if not self.q < self.p:
            raise ValueError(f"need q < p, got ({self.p}, {self.q})")


@dataclass(frozen=True)
class GradedSpace:
    id: GradedSpaceId
    rect: Rectangle | None  # None: the zero space
    shift: int = 0  # added to every row of the D basis for kind E

    def basis(self) -> list[Partition]:
        if self.rect is None:
            return []
        base = partitions_in(self.rect)
        if self.id.kind != "E":
            return base
        return [add_to_parts(mu, self.rect.rows, self.shift) for mu in base]


def b_cols(inp: SchubertInput, p: int) -> int:
    # equals c-p+1 when c < k; the min only matters in the all-small regime
    return min(inp.c - p + 1, inp.i_p(p))


def space_rectangle(sid: GradedSpaceId, inp: SchubertInput) -> GradedSpace:
    p, q = sid.p, sid.q
    rows = p - q
    if sid.kind == "A":
        return GradedSpace(sid, Rectangle(rows, inp.i_p(p)))
    if sid.kind == "B":
        return GradedSpace(sid, Rectangle(rows, b_cols(inp, p)))
    if inp.delta_pq(p, q) < 0:
        return GradedSpace(sid, None)
    rect = Rectangle(rows, inp.k - inp.c + q - p)
    if sid.kind == "D":
        return GradedSpace(sid, rect)
    return GradedSpace(sid, rect, shift=inp.c + 1 - q)


def f_poly(inp: SchubertInput, p: int, q: int) -> LaurentPoly:
    if p == q:
        return ONE
    return _gr(p - q, inp.k - inp.c)


def b_poly(inp: SchubertInput, p: int, q: int) -> LaurentPoly:
    if p == q:
        return ONE
    return _gr(p - q, p - q + b_cols(inp, p))


def space_poincare(sid: GradedSpaceId, inp: SchubertInput) -> LaurentPoly:
    p, q = sid.p, sid.q
    if sid.kind == "D":
        return f_poly(inp, p, q)
    if sid.kind == "B":
        return b_poly(inp, p, q)
    if sid.kind == "A":
        return _gr(p - q, inp.i_p(q))
    return f_poly(inp, p, q).shift(2 * inp.d_pq(p, q))


def h_poly(inp: SchubertInput, p: int) -> LaurentPoly:
    """Poincaré polynomial of the resolution total space over Δ_p.

    Grassmannian bundle: base Gr(i_p, C^j) of subspaces of F, fiber
    Gr(p-1, C^(l-i_p)).
    """
    if p not in inp.strata:
        raise IndexError(f"stratum p={p} outside 1..{inp.r + 1}")
    ip = inp.i_p(p)
    return _gr(ip, inp.j) * _gr(p - 1, inp.l - ip)


@dataclass
class IHTable:
    I: dict[int, LaurentPoly]
    H: dict[int, LaurentPoly]
    f: dict[tuple[int, int], LaurentPoly]
    g: dict[tuple[int, int], LaurentPoly]
    P: dict[tuple[int, int], LaurentPoly] = field(default_factory=dict)


def _g_table(inp: SchubertInput):
    f = {(p, q): f_poly(inp, p, q) for p, q in inp.pairs()}
    g = {(p, q): f[p, q].shift(2 * inp.d_pq(p, q)) for p, q in inp.pairs()}
    return f, g


def ih_recursion(inp: SchubertInput) -> IHTable:
    """I_p = H_p - sum_{q<p} t^(2 d_pq) f_pq I_q, with I_1 = H_1."""
    H = {p: h_poly(inp, p) for p in inp.strata}
    f, g = _g_table(inp)
    I: dict[int, LaurentPoly] = {}
    P: dict[tuple[int, int], LaurentPoly] = {}
    for p in inp.strata:
        acc = H[p]
        for q in range(1, p):
            P[p, q] = g[p, q] * I[q]
            acc = acc - P[p, q]
        I[p] = acc
    return IHTable(I, H, f, g, P)


def nilpotent_powers(inp: SchubertInput) -> list[dict[tuple[int, int], LaurentPoly]]:
    """N^0 .. N^r for the strictly triangular matrix N[p][q] = g_pq (q < p)."""
    _, g = _g_table(inp)
    strata = list(inp.strata)
    ident = {(p, p): ONE for p in strata}
    powers = [ident]
    for _ in range(inp.r):
        prev = powers[-1]
        nxt: dict[tuple[int, int], LaurentPoly] = {}
        for p in strata:
            for q in strata:
                acc = ZERO
                for s in strata:
                    a = prev.get((p, s))
                    b = g.get((s, q))
                    if a is not None and b is not None:
                        acc = acc + a * b
                if not acc.is_zero():
                    nxt[p, q] = acc
        powers.append(nxt)
    return powers


def ih_matrix(inp: SchubertInput) -> IHTable:
    """I = (1 + N)^-1 H expanded as the finite alternating series in N."""
    H = {p: h_poly(inp, p) for p in inp.strata}
    f, g = _g_table(inp)
    I = {p: ZERO for p in inp.strata}
    for k, Nk in enumerate(nilpotent_powers(inp)):
        sign = -1 if k % 2 else 1
        for (p, q), entry in Nk.items():
            I[p] = I[p] + _poly.poly_scale(entry * H[q], sign)
    return IHTable(I, H, f, g)


def oracle_resolution(inp: SchubertInput, p: int) -> str:
    """Which small resolution computes IC on Δ_p: ``"xi"`` or ``"pi"``."""
    qs = range(1, p)
    if all(xi_pair_small(inp, p, q) for q in qs):
        return "xi"
    if all(pi_pair_small(inp, p, q) for q in qs):
        return "pi"
    raise SmallnessError(f"no small resolution over stratum {p} of {inp}")


def small_resolution_oracle(inp: SchubertInput, p: int) -> LaurentPoly:
    """IH Poincaré polynomial of Δ_p from the total space of a small resolution.

    The xi_p total space fibers over {U ⊇ F : dim U = k+j-i_p} ≅ Gr(p-1, C^c)
    with fiber {V ⊆ U} ≅ Gr(k, C^(k+j-i_p)).  When xi_p is not small (only
    possible when k < c) the resolution pi_p is small instead and its total
    space is used.
    """
    ip = inp.i_p(p)
    if oracle_resolution(inp, p) == "xi":
        return _gr(p - 1, inp.c) * _gr(inp.k, inp.k + inp.j - ip)
    return _gr(p - 1, inp.l - ip) * _gr(ip, inp.j)


def stalk_table(inp: SchubertInput, p: int, q: int) -> LaurentPoly:
    """Stalk Poincaré polynomial of IC_{Δ_p}[-m_p] along the open part of Δ_q."""
    if not 1 <= q < p <= inp.r + 1:
        raise IndexError(f"need 1 <= q < p <= {inp.r + 1}, got ({p}, {q})")
    return b_poly(inp, p, q)


@dataclass(frozen=True)
class SummandRecord:
    q: int
    mults: dict[int, int]  # perverse shift -> multiplicity


@dataclass(frozen=True)
class SummandTable:
    p: int
    records: tuple[SummandRecord, ...]  # q = 1 .. p-1
    ic_shift: int = 0

    def record(self, q: int) -> SummandRecord:
        return self.records[q - 1]

    def is_trivial(self) -> bool:
        return all(not rec.mults for rec in self.records)


def _d_weight_counts(inp: SchubertInput, p: int, q: int) -> list[int]:
    space = space_rectangle(GradedSpaceId("D", p, q), inp)
    if space.rect is None:
        return []
    try:
        return [len(level) for level in enumerate_by_weight(space.rect)]
    except EnumerationLimitError:
        return f_poly(inp, p, q).dense(step=2)


def summand_table(inp: SchubertInput, p: int) -> SummandTable:
    if p not in inp.strata:
        raise IndexError(f"stratum p={p} outside 1..{inp.r + 1}")
    records = []
    for q in range(1, p):
        delta = inp.delta_pq(p, q)
        mults = {}
        for w, count in enumerate(_d_weight_counts(inp, p, q)):
            if count:
                mults[2 * w - delta] = count
        records.append(SummandRecord(q, mults))
    return SummandTable(p, tuple(records))


@dataclass(frozen=True)
class PerverseTable:
    """Perverse cohomology of the pushforward under the full resolution.

    ``degrees[i]`` lists (support stratum, multiplicity); support ``top``
    (= r+1) stands for IC_S.
    """
    top: int
    degrees: dict[int, list[tuple[int, int]]]

    def multiplicity(self, i: int, q: int) -> int:
        return dict(self.degrees.get(i, [])).get(q, 0)

    def is_symmetric(self) -> bool:
        return all(
            sorted(self.degrees.get(i, [])) == sorted(self.degrees.get(-i, []))
            for i in self.degrees
        )


def perverse_table(inp: SchubertInput) -> PerverseTable:
    top = inp.r + 1
    table = summand_table(inp, top)
    degrees: dict[int, list[tuple[int, int]]] = {0: [(top, 1)]}
    for rec in sorted(table.records, key=lambda rec: -rec.q):
        for i, m in rec.mults.items():
            degrees.setdefault(i, []).append((rec.q, m))
    return PerverseTable(top, {i: degrees[i] for i in sorted(degrees)})


def in_gysin_image(nu: Partition, inp: SchubertInput, p: int, q: int) -> bool:
    """Whether sigma_nu in A_pq is divisible by the top Chern class c_pq^(c+1-q)."""
    rect = space_rectangle(GradedSpaceId("A", p, q), inp).rect
    if not contains(rect, nu):
        raise PartitionError(f"{nu or '()'} does not fit the A_{p}{q} rectangle {rect}")
    threshold = inp.c + 1 - q
    return all(x >= threshold for x in nu.padded(p - q))


@dataclass
class LocalDecomposition:
    p: int
    l: int
    classes: dict[int, list[Partition]]
    preimages: dict[Partition, tuple[int, Partition, Partition]]
    count_lhs: LaurentPoly
    count_rhs: LaurentPoly

    def class_sizes(self) -> dict[int, int]:
        return {q: len(v) for q, v in self.classes.items()}


def local_decomposition(inp: SchubertInput, p: int, l: int) -> LocalDecomposition:
    """Split the A_pl basis by Gysin image class and check the direct-sum claims.

    Raises :class:`ClassificationError` if a partition is classified
    ambiguously, a class is not exactly the Gysin image of D_pq x B_ql,
    the class-p members are not the B_pl basis, or the graded counts differ.
    """
    if not 1 <= l < p <= inp.r + 1:
        raise IndexError(f"need 1 <= l < p <= {inp.r + 1}, got p={p}, l={l}")
    c = inp.c
    a_space = space_rectangle(GradedSpaceId("A", p, l), inp)
    classes: dict[int, list[Partition]] = {q: [] for q in range(l, p + 1)}
    for nu in a_space.basis():
        classes[classify_stratum(nu, p, l, c)].append(nu)

    preimages: dict[Partition, tuple[int, Partition, Partition]] = {}
    for q in range(l, p):
        d_basis = space_rectangle(GradedSpaceId("D", p, q), inp).basis()
        if q == l:
            b_basis = [EMPTY]
        else:
            b_basis = space_rectangle(GradedSpaceId("B", q, l), inp).basis()
        image = {}
        for mu in d_basis:
            for lam in b_basis:
                nu = gysin_compose(mu, lam, p - q, c + 1 - q)
                if nu in image:
                    raise ClassificationError(f"{nu} hit twice in class {q}")
                image[nu] = (q, mu, lam)
        if set(image) != set(classes[q]):
            raise ClassificationError(
                f"class {q} of A_{p}{l}: expected={sorted(image)}; got={sorted(classes[q])}"
            )
        for nu in classes[q]:
            q2, mu, lam = image[nu]
            if gysin_split(nu, p - q, c + 1 - q) != (mu, lam):
                raise ClassificationError(f"split of {nu} does not invert gysin_compose")
        preimages.update(image)

    b_pl = space_rectangle(GradedSpaceId("B", p, l), inp).basis()
    if sorted(classes[p]) != sorted(b_pl):
        raise ClassificationError(f"class {p} of A_{p}{l} vs B_{p}{l}: expected={sorted(b_pl)}; got={sorted(classes[p])}")

    lhs = space_poincare(GradedSpaceId("A", p, l), inp)
    rhs = ZERO
    for q in range(l, p + 1):
        d = inp.d_pq(p, q) if q < p else 0
        rhs = rhs + f_poly(inp, p, q).shift(2 * d) * b_poly(inp, q, l)
    if lhs != rhs:
        raise ClassificationError(f"graded count identity (p,l)=({p},{l}): expected={lhs}; got={rhs}")
    return LocalDecomposition(p, l, classes, preimages, lhs, rhs)


def d_ring(inp: SchubertInput, p: int, q: int) -> RingSpec:
    delta = inp.delta_pq(p, q)
    if delta < 0:
        raise ValueError(f"D_{p}{q} is zero (delta={delta})")
    return RingSpec(p - q, inp.k - inp.c + q - p)


def hard_lefschetz_verify(inp: SchubertInput, p: int, q: int) -> bool:
    """Cup with sigma_1^i is an isomorphism D^(delta-i) -> D^(delta+i) for all i."""
    spec = d_ring(inp, p, q)
    for i in range(inp.delta_pq(p, q) + 1):
        _, _, M = lefschetz_power_matrix(spec, i)
        if not is_full_rank_square(M):
            return False
    return True
