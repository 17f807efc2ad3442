"""Report assembly and the text / JSON / LaTeX emitters."""

from __future__ import annotations

import json

from .checks import run_checks
from .decomposition import ih_recursion, perverse_table, stalk_table, summand_table
from .geometry import SchubertInput, geometry_json
from .poly import LaurentPoly

SCHEMA_VERSION = "schubert-ic/1"


def support_label(q: int, top: int):
    return "IC_S" if q == top else q


def summands_json(inp: SchubertInput, p: int) -> list[dict]:
    table = summand_table(inp, p)
    out = [{"q": p, "mults": {str(table.ic_shift): 1}}]
    for rec in table.records:
        out.append({"q": rec.q, "mults": {str(i): m for i, m in sorted(rec.mults.items())}})
    return out


def perverse_json(inp: SchubertInput) -> dict:
    table = perverse_table(inp)
    return {str(i): [[support_label(q, table.top), m] for q, m in entries]
            for i, entries in table.degrees.items()}


def build_report(inp: SchubertInput, with_checks: bool = True) -> dict:
    rec = ih_recursion(inp)
    report = {"schema": SCHEMA_VERSION}
    report.update(geometry_json(inp))
    report["ih"] = {str(p): rec.I[p].to_json() for p in inp.strata}
    report["h"] = {str(p): rec.H[p].to_json() for p in inp.strata}
    report["summands"] = {str(p): summands_json(inp, p) for p in inp.strata}
    report["perverse"] = perverse_json(inp)
    report["stalks"] = {f"{p},{q}": stalk_table(inp, p, q).to_json() for p, q in inp.pairs()}
    if with_checks:
        report["checks"] = {res.check: res.status for res in run_checks(inp)}
    return report


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def _poly(pairs) -> LaurentPoly:
    return LaurentPoly.from_json(pairs)


def to_text(report: dict) -> str:
    inp = report["input"]
    lines = [
        f"Schubert variety (i,j,k,l)=({inp['i']},{inp['j']},{inp['k']},{inp['l']})  "
        f"r={inp['r']} c={inp['c']} regime={inp['regime']}",
        "",
        "strata:",
    ]
    for s in report["strata"]:
        lines.append(f"  p={s['p']}  i_p={s['i_p']}  m_p={s['m_p']}")
    if report["pairs"]:
        lines.append("pairs:")
        for row in report["pairs"]:
            lines.append(
                f"  (p,q)=({row['p']},{row['q']})  k={row['k']} d={row['d']} delta={row['delta']} "
                f"kbar={row['kbar']} xi_small={str(row['xi_small']).lower()} "
                f"pi_small={str(row['pi_small']).lower()}"
            )
    lines.append("intersection cohomology I_p(t):")
    for p, pairs in report["ih"].items():
        lines.append(f"  I_{p} = {_poly(pairs)}")
    lines.append("resolution cohomology H_p(t):")
    for p, pairs in report["h"].items():
        lines.append(f"  H_{p} = {_poly(pairs)}")
    lines.append("summands (q: shift -> multiplicity):")
    for p, recs in report["summands"].items():
        body = "; ".join(
            f"q={r['q']} {{{', '.join(f'{i}: {m}' for i, m in r['mults'].items())}}}" for r in recs
        )
        lines.append(f"  p={p}: {body}")
    lines.append("perverse cohomology of the full resolution:")
    lines.extend("  " + line for line in perverse_lines(report["perverse"]))
    if report["stalks"]:
        lines.append("stalks of IC_{Δ_p}[-m_p] along Δ_q:")
        for key, pairs in report["stalks"].items():
            lines.append(f"  ({key}) {_poly(pairs)}")
    if "checks" in report:
        lines.append("checks:")
        for name, status in report["checks"].items():
            lines.append(f"  {name}: {status}")
    return "\n".join(lines) + "\n"


def perverse_lines(perverse: dict) -> list[str]:
    out = []
    for i, entries in perverse.items():
        cells = ["IC_S" if q == "IC_S" else f"Δ_{q}:{m}" for q, m in entries]
        out.append(f"i={i}: " + "  ".join(cells))
    return out


def _tex_poly(P: LaurentPoly) -> str:
    text = str(P).replace("*", "")
    for e, _ in P.terms():
        if e not in (0, 1):
            text = text.replace(f"t^{e}", f"t^{{{e}}}")
    return f"${text}$"


def to_latex(report: dict) -> str:
    inp = report["input"]
    out = [f"% special Schubert variety (i,j,k,l)=({inp['i']},{inp['j']},{inp['k']},{inp['l']})"]

    out += [r"\begin{tabular}{rrr}", r"$p$ & $i_p$ & $m_p$ \\ \hline"]
    out += [f"{s['p']} & {s['i_p']} & {s['m_p']} \\\\" for s in report["strata"]]
    out += [r"\end{tabular}", ""]

    if report["pairs"]:
        out += [r"\begin{tabular}{rrrrrr}",
                r"$p$ & $q$ & $k_{pq}$ & $d_{pq}$ & $\delta_{pq}$ & $\bar k_{pq}$ \\ \hline"]
        out += [f"{r['p']} & {r['q']} & {r['k']} & {r['d']} & {r['delta']} & {r['kbar']} \\\\"
                for r in report["pairs"]]
        out += [r"\end{tabular}", ""]

    polys = {p: _poly(v) for p, v in report["ih"].items()}
    top = max((P.max_degree or 0) for P in polys.values())
    degrees = list(range(0, top + 1, 2))
    out.append(r"\begin{tabular}{r" + "r" * len(degrees) + "}")
    out.append("$p$ & " + " & ".join(f"$t^{{{e}}}$" for e in degrees) + r" \\ \hline")
    for p, P in polys.items():
        out.append(f"{p} & " + " & ".join(str(P.coeff(e)) for e in degrees) + r" \\")
    out += [r"\end{tabular}", ""]

    out += [r"\begin{tabular}{rl}", r"$i$ & summands \\ \hline"]
    for i, entries in report["perverse"].items():
        cells = ", ".join(r"$IC_S$" if q == "IC_S" else f"$IC_{{\\Delta_{q}}}^{{{m}}}$" for q, m in entries)
        out.append(f"{i} & {cells} \\\\")
    out += [r"\end{tabular}", ""]

    if report["stalks"]:
        out += [r"\begin{tabular}{rl}", r"$(p,q)$ & stalk \\ \hline"]
        for key, pairs in report["stalks"].items():
            out.append(f"({key}) & {_tex_poly(_poly(pairs))} \\\\")
        out += [r"\end{tabular}", ""]
    return "\n".join(out)
