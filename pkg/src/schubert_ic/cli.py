"""Command-line front end.

Exit codes: 0 ok, 2 invalid input, 3 verification failure, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import report as rpt
from .checks import sweep
from .decomposition import ih_recursion, stalk_table
from .geometry import NON_SMALL, InvalidInputError, SchubertInput, valid_inputs, validate
from .partitions import Partition, PartitionError
from .schur import RingSpec, lr_multiply, pieri_column, pieri_row, sigma

EXIT_OK, EXIT_INVALID, EXIT_VERIFY, EXIT_IO = 0, 2, 3, 4


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INVALID):
        super().__init__(message)
        self.code = code


def _input(args) -> SchubertInput:
    try:
        return validate(args.i, args.j, args.k, args.l)
    except InvalidInputError as exc:
        raise CliError(f"invalid input: {exc}") from None


def _emit(text: str, out: str | None = None):
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write {out}: {exc}", EXIT_IO) from None


def _stratum(inp: SchubertInput, p: int | None) -> list[int]:
    if p is None:
        return list(inp.strata)
    if p not in inp.strata:
        raise CliError(f"-p {p} outside 1..{inp.r + 1}")
    return [p]


def cmd_validate(args):
    inp = _input(args)
    print(f"valid: r={inp.r} c={inp.c} regime={inp.regime}")


def cmd_analyze(args):
    inp = _input(args)
    report = rpt.build_report(inp)
    if args.format == "json":
        text = rpt.to_json(report)
    elif args.format == "latex":
        text = rpt.to_latex(report)
    else:
        text = rpt.to_text(report)
    _emit(text, args.out)


def cmd_ih(args):
    inp = _input(args)
    strata = _stratum(inp, args.p)
    rec = ih_recursion(inp)
    if args.format == "json":
        _emit(rpt.to_json({str(p): rec.I[p].to_json() for p in strata}))
    elif args.p is not None:
        _emit(f"{rec.I[args.p]}\n")
    else:
        _emit("".join(f"I_{p} = {rec.I[p]}\n" for p in strata))


def cmd_stalks(args):
    inp = _input(args)
    if args.q is not None and args.p is None:
        raise CliError("-q needs -p")
    pairs = [(p, q) for p, q in inp.pairs()
             if (args.p is None or p == args.p) and (args.q is None or q == args.q)]
    if args.p is not None:
        _stratum(inp, args.p)
        if args.q is not None and not 1 <= args.q < args.p:
            raise CliError(f"-q {args.q} must satisfy 1 <= q < p={args.p}")
    if args.format == "json":
        _emit(rpt.to_json({f"{p},{q}": stalk_table(inp, p, q).to_json() for p, q in pairs}))
    elif args.p is not None and args.q is not None:
        _emit(f"{stalk_table(inp, args.p, args.q)}\n")
    else:
        _emit("".join(f"({p},{q}) {stalk_table(inp, p, q)}\n" for p, q in pairs))


def cmd_perverse(args):
    inp = _input(args)
    data = rpt.perverse_json(inp)
    if args.format == "json":
        _emit(rpt.to_json(data))
    else:
        _emit("".join(line + "\n" for line in rpt.perverse_lines(data)))


def cmd_summands(args):
    inp = _input(args)
    strata = _stratum(inp, args.p)
    data = {str(p): rpt.summands_json(inp, p) for p in strata}
    if args.format == "json":
        _emit(rpt.to_json(data))
        return
    lines = []
    for p, recs in data.items():
        for r in recs:
            tag = "IC" if r["q"] == int(p) else f"q={r['q']}"
            mults = ", ".join(f"{i}: {m}" for i, m in r["mults"].items())
            lines.append(f"p={p} {tag}: {{{mults}}}\n")
    _emit("".join(lines))


def _parse_part(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except PartitionError as exc:
        raise CliError(str(exc)) from None


def cmd_ring(args):
    try:
        spec = RingSpec(args.rows, args.cols)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    lam = _parse_part(args.lam)
    try:
        if args.op == "mult":
            result = lr_multiply(spec, sigma(spec, lam), sigma(spec, _parse_part(args.other)))
        else:
            try:
                m = int(args.other)
            except ValueError:
                raise CliError(f"strip size must be an integer, got {args.other!r}") from None
            if m < 0:
                raise CliError("strip size must be nonnegative")
            fn = pieri_row if args.op == "pieri-row" else pieri_column
            result = fn(spec, lam, m)
    except PartitionError as exc:
        raise CliError(str(exc)) from None
    print(result)


def cmd_verify(args):
    if args.max_l < 1:
        raise CliError("--max-l must be positive")
    results = sweep(args.max_l, max(1, args.jobs))
    inputs = valid_inputs(args.max_l)
    n_non_small = sum(1 for inp in inputs if inp.regime == NON_SMALL)
    failures = [res for res in results if not res.ok]

    if args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["i", "j", "k", "l", "check", "status", "detail"])
        for res in results:
            writer.writerow([*res.inp.as_tuple(), res.check, res.status, res.detail])
        _emit(buf.getvalue(), args.csv)

    lines = [
        f"tuples: {len(inputs)} (non-small: {n_non_small}, all-small: {len(inputs) - n_non_small}) with l <= {args.max_l}",
        f"checks: {len(results) - len(failures)} passed, {len(failures)} failed",
    ]
    if n_non_small == 0:
        lines.append("note: no non-small-regime tuples exist at this bound")
    for res in failures:
        lines.append(f"FAIL {res.inp} {res.check}: {res.detail}")
    print("\n".join(lines))
    return EXIT_VERIFY if failures else EXIT_OK


def _add_ijkl(sp):
    for name in ("i", "j", "k", "l"):
        sp.add_argument(name, type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubert-ic",
        description="Decomposition Theorem data for special Schubert varieties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("validate", help="check the constraints 0<i<k<=j<l and r<c")
    _add_ijkl(sp)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("analyze", help="full report")
    _add_ijkl(sp)
    sp.add_argument("--format", choices=("text", "json", "latex"), default="text")
    sp.add_argument("--out", help="write to FILE instead of stdout")
    sp.set_defaults(func=cmd_analyze)

    for name, func, help_text, pq in (
        ("ih", cmd_ih, "intersection cohomology Poincaré polynomials", "p"),
        ("stalks", cmd_stalks, "IC stalk Poincaré polynomials", "pq"),
        ("perverse", cmd_perverse, "perverse cohomology table of the full resolution", ""),
        ("summands", cmd_summands, "summand multiplicity tables", "p"),
    ):
        sp = sub.add_parser(name, help=help_text)
        _add_ijkl(sp)
        if "p" in pq:
            sp.add_argument("-p", type=int)
        if "q" in pq:
            sp.add_argument("-q", type=int)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.set_defaults(func=func, p=None, q=None)

    sp = sub.add_parser("ring", help="products in the Schur basis of a Grassmannian")
    sp.add_argument("--rows", type=int, required=True)
    sp.add_argument("--cols", type=int, required=True)
    sp.add_argument("op", choices=("mult", "pieri-row", "pieri-col"))
    sp.add_argument("lam", help='partition, e.g. "2,1"; "" is the empty partition')
    sp.add_argument("other", help="second partition for mult, strip size for pieri-*")
    sp.set_defaults(func=cmd_ring)

    sp = sub.add_parser("verify", help="run every invariant over all valid tuples with l <= N")
    sp.add_argument("--max-l", type=int, default=10)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--csv", help="write the per-check log to FILE")
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
