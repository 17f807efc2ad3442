"""Invariant suite run per input by ``verify`` and embedded in reports."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb

from . import poly as _poly
from .decomposition import (
    GradedSpaceId,
    hard_lefschetz_verify,
    ih_matrix,
    ih_recursion,
    local_decomposition,
    oracle_resolution,
    perverse_table,
    small_resolution_oracle,
    space_rectangle,
    stalk_table,
    summand_table,
)
from .geometry import NON_SMALL, SchubertInput, fiber_descriptors, resolution_smallness, valid_inputs
from .oracle import gaussian_by_enumeration
from .partitions import ClassificationError, EnumerationLimitError
from .poly import LaurentPoly, evaluate_at_one, is_palindromic

CHECK_NAMES = (
    "geometry_identities",
    "gaussian_enumeration",
    "triple_oracle",
    "poincare_duality",
    "decomposition_identity",
    "euler_count",
    "stalk_support",
    "local_decomposition",
    "relative_hard_lefschetz",
    "smallness",
    "all_small_regime",
)


@dataclass(frozen=True)
class CheckResult:
    inp: SchubertInput
    check: str
    ok: bool
    detail: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"


class _Fail(Exception):
    pass


def _expect(cond: bool, expected, got, where: str = ""):
    if not cond:
        raise _Fail(f"{where}expected={expected}; got={got}".strip())


def _geometry_identities(inp):
    for p, q in inp.pairs():
        kk, d, delta = inp.k_pq(p, q), inp.d_pq(p, q), inp.delta_pq(p, q)
        _expect(kk == d + delta, kk, d + delta, f"k_pq=d+delta ({p},{q}) ")
        diff = inp.m_p(p) - inp.m_p(q)
        _expect(diff == kk + d, diff, kk + d, f"m_p-m_q ({p},{q}) ")
        _expect(diff == (p - q) * (inp.c + inp.k + 2 - p - q), diff, None, f"m_p-m_q closed form ({p},{q}) ")
        dims = {fd.kind: fd.dim for fd in fiber_descriptors(inp, p, q)}
        _expect(dims["F_pq"] == kk, kk, dims["F_pq"], f"dim F_pq ({p},{q}) ")
        _expect(dims["G_pq"] == inp.kbar_pq(p, q), inp.kbar_pq(p, q), dims["G_pq"], f"dim G_pq ({p},{q}) ")
    ms = [inp.m_p(p) for p in inp.strata]
    _expect(all(a < b for a, b in zip(ms, ms[1:])) and ms[0] >= 0, "increasing m_p", ms)
    for p in inp.strata:
        want = (inp.r + 1 - p) * (inp.c + inp.k + 1 - inp.r - p)
        _expect(inp.n - inp.m_p(p) == want, want, inp.n - inp.m_p(p), f"n-m_p p={p} ")


def _gaussian_enumeration(inp):
    for p in inp.strata:
        ip = inp.i_p(p)
        for a, b in ((ip, inp.j), (p - 1, inp.l - ip), (p - 1, inp.c), (inp.k, inp.k + inp.j - ip)):
            try:
                want = gaussian_by_enumeration(a, b)
            except EnumerationLimitError:
                continue
            got = _poly.grassmannian_poincare(a, b)
            _expect(got == want, want, got, f"Gr({a},{b}) ")


def _triple_oracle(inp):
    rec, mat = ih_recursion(inp), ih_matrix(inp)
    for p in inp.strata:
        orc = small_resolution_oracle(inp, p)
        _expect(rec.I[p] == mat.I[p], rec.I[p], mat.I[p], f"recursion vs matrix p={p} ")
        _expect(rec.I[p] == orc, orc, rec.I[p], f"oracle p={p} ")


def _poincare_duality(inp):
    rec = ih_recursion(inp)
    for p in inp.strata:
        I, m = rec.I[p], inp.m_p(p)
        _expect(is_palindromic(I, m), f"palindromic about {m}", I, f"p={p} ")
        _expect(all(a > 0 and e % 2 == 0 and 0 <= e <= 2 * m for e, a in I.terms()),
                "nonnegative even-degree support", I, f"p={p} ")


def _decomposition_identity(inp):
    rec = ih_recursion(inp)
    for p in inp.strata:
        total = rec.I[p]
        for q in range(1, p):
            total = total + rec.g[p, q] * rec.I[q]
        _expect(total == rec.H[p], rec.H[p], total, f"H_p p={p} ")
        table = summand_table(inp, p)
        for rec_q in table.records:
            q = rec_q.q
            delta = inp.delta_pq(p, q)
            from_mults = LaurentPoly({delta + i: m for i, m in rec_q.mults.items()})
            _expect(from_mults == rec.f[p, q], rec.f[p, q], from_mults, f"summand vs f ({p},{q}) ")


def _euler_count(inp):
    rec = ih_recursion(inp)
    for p in inp.strata:
        ip = inp.i_p(p)
        h_count = comb(inp.j, ip) * comb(inp.l - ip, p - 1)
        _expect(evaluate_at_one(rec.H[p]) == h_count, h_count, evaluate_at_one(rec.H[p]), f"H_p(1) p={p} ")
        if oracle_resolution(inp, p) == "xi":
            want = comb(inp.c, p - 1) * comb(inp.k + inp.j - ip, inp.k)
        else:
            want = h_count
        _expect(evaluate_at_one(rec.I[p]) == want, want, evaluate_at_one(rec.I[p]), f"I_p(1) p={p} ")


def _stalk_support(inp):
    for p, q in inp.pairs():
        stalk = stalk_table(inp, p, q)
        top = stalk.max_degree
        bound = inp.m_p(p) - inp.m_p(q)
        _expect(top is not None and top < bound, f"< {bound}", top, f"stalk ({p},{q}) ")
        if inp.regime == NON_SMALL:
            _expect(top == 2 * inp.kbar_pq(p, q), 2 * inp.kbar_pq(p, q), top, f"stalk top ({p},{q}) ")


def _local_decomposition(inp):
    for p, l in inp.pairs():
        try:
            local_decomposition(inp, p, l)
        except ClassificationError as exc:
            raise _Fail(f"(p,l)=({p},{l}): {exc}") from None


def _relative_hard_lefschetz(inp):
    table = perverse_table(inp)
    _expect(table.is_symmetric(), "symmetric in i", table.degrees)
    for p, q in inp.pairs():
        if inp.delta_pq(p, q) >= 0:
            _expect(hard_lefschetz_verify(inp, p, q), "full rank", "degenerate", f"({p},{q}) ")
        else:
            _expect(space_rectangle(GradedSpaceId("D", p, q), inp).rect is None, "D=0", "nonzero D", f"({p},{q}) ")


def _smallness(inp):
    reports = resolution_smallness(inp)
    if inp.regime == NON_SMALL:
        _expect(all(r.xi_small for r in reports), "xi_p small for all p", [r.xi_small for r in reports])
        _expect(not reports[-1].pi_small, "pi not small", "pi small")
    else:
        _expect(all(r.pi_small for r in reports), "pi_p small for all p", [r.pi_small for r in reports])


def _all_small_regime(inp):
    if inp.regime == NON_SMALL:
        return
    rec = ih_recursion(inp)
    for p in inp.strata:
        _expect(summand_table(inp, p).is_trivial(), "trivial summands", "nontrivial", f"p={p} ")
        _expect(rec.I[p] == rec.H[p], rec.H[p], rec.I[p], f"I_p=H_p p={p} ")
    table = perverse_table(inp)
    _expect(table.degrees == {0: [(inp.r + 1, 1)]}, "IC_S only", table.degrees)


_CHECKS = {
    "geometry_identities": _geometry_identities,
    "gaussian_enumeration": _gaussian_enumeration,
    "triple_oracle": _triple_oracle,
    "poincare_duality": _poincare_duality,
    "decomposition_identity": _decomposition_identity,
    "euler_count": _euler_count,
    "stalk_support": _stalk_support,
    "local_decomposition": _local_decomposition,
    "relative_hard_lefschetz": _relative_hard_lefschetz,
    "smallness": _smallness,
    "all_small_regime": _all_small_regime,
}


def run_checks(inp: SchubertInput) -> list[CheckResult]:
    out = []
    for name in CHECK_NAMES:
        try:
            _CHECKS[name](inp)
        except _Fail as exc:
            out.append(CheckResult(inp, name, False, str(exc)))
        except Exception as exc:  # a crash is a failed check, not a crashed sweep
            out.append(CheckResult(inp, name, False, f"{type(exc).__name__}: {exc}"))
        else:
            out.append(CheckResult(inp, name, True))
    return out


def sweep(max_l: int, jobs: int = 1) -> list[CheckResult]:
    """Run every check on every valid input with l <= max_l, in (l,k,j,i) order."""
    inputs = valid_inputs(max_l)
    if jobs <= 1:
        batches = [run_checks(inp) for inp in inputs]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(run_checks, inputs, chunksize=4))
    return [res for batch in batches for res in batch]
