"""Command line interface: ``lucasnum {table,eval,poly,verify}``.

Exit codes: 0 success, 1 failed verification or evaluation error, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import sequences as sq
from . import verify as vf
from .polyring import Poly, RationalFunction, canonical_string

FORMATS = ("text", "csv", "json", "latex")

STIRLING_NOTE = (
    "column k=2 follows St2(n,n)=1 and gives 1+s+...+s^(n-2), which specializes to "
    "S(n,2)=2^(n-1)-1 at (s,t)=(2,-1); printings showing 1+s+...+s^(n-1) there are errata"
)


def _cell_text(v) -> str:
    return str(v)


def _cell_latex(v) -> str:
    if isinstance(v, RationalFunction) and not v.is_polynomial():
        return f"$\\frac{{{canonical_string(v.num)}}}{{{canonical_string(v.den)}}}$"
    s = str(v)
    return s if s.lstrip("-").isdigit() else f"${s}$"


def table_grid(seq: sq.SequenceId, rows: int) -> tuple[list[str], list[list]]:
    """Header labels and value rows; cells above the diagonal are zero."""
    table = sq.triangle(seq, rows)
    if table.arity == 1:
        return ["n", "value"], [[n, table[(n, 0)]] for n in range(rows + 1)]
    header = ["n\\k"] + [str(k) for k in range(rows + 1)]
    body = []
    for n in range(rows + 1):
        body.append([n] + [table[(n, k)] if k <= n else Poly() for k in range(rows + 1)])
    return header, body


def _notes(seq: sq.SequenceId, rows: int) -> list[str]:
    if seq is sq.SequenceId.stirling2 and rows >= 2:
        return [STIRLING_NOTE]
    return []


def render_table(seq: sq.SequenceId, rows: int, fmt: str) -> str:
    header, body = table_grid(seq, rows)
    notes = _notes(seq, rows)
    if fmt == "json":
        return json.dumps({
            "sequence": str(seq),
            "formula": sq.sequence_info(seq).formula,
            "header": header,
            "rows": [[_cell_text(c) for c in row[1:]] for row in body],
            "notes": notes,
        }, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for row in body:
            w.writerow([row[0]] + [_cell_text(c) for c in row[1:]])
        return buf.getvalue().rstrip("\n")
    if fmt == "latex":
        lines = ["\\begin{tabular}{c|" + "c" * (len(header) - 1) + "}"]
        head = ["$n$", "value"] if header[0] == "n" else ["$n\\backslash k$"] + header[1:]
        lines.append(" & ".join(head) + " \\\\")
        lines.append("\\hline")
        for row in body:
            lines.append(" & ".join([str(row[0])] + [_cell_latex(c) for c in row[1:]]) + " \\\\")
        lines.append("\\end{tabular}")
        lines += [f"% note: {n}" for n in notes]
        return "\n".join(lines)
    cells = [header] + [[str(row[0])] + [_cell_text(c) for c in row[1:]] for row in body]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    out = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    out += [f"note: {n}" for n in notes]
    return "\n".join(out)


def render_report(report: vf.VerificationReport, fmt: str) -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "status", "index_range", "cells", "witness", "note"])
        for c in report.checks:
            w.writerow([c.id, c.status, c.index_range, c.cells,
                        json.dumps(c.witness, sort_keys=True) if c.witness else "", c.note])
        return buf.getvalue().rstrip("\n")
    if fmt == "latex":
        lines = ["\\begin{tabular}{lll}", "check & status & range \\\\", "\\hline"]
        for c in report.checks:
            cid = c.id.replace("_", "\\_")
            lines.append(f"\\texttt{{{cid}}} & {c.status} & \\verb|{c.index_range}| \\\\")
        lines.append("\\end{tabular}")
        return "\n".join(lines)
    return report.to_text()


def _format_number(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lucasnum", description="Lucas analogues of combinatorial triangles.")
    sub = parser.add_subparsers(dest="command", required=True)
    seqs = [s.value for s in sq.SequenceId]

    p = sub.add_parser("table", help="print rows 0..ROWS of a sequence")
    p.add_argument("--seq", required=True, choices=seqs)
    p.add_argument("--rows", type=int, default=5)
    p.add_argument("--format", default="text", choices=FORMATS)

    for name, help_ in (("eval", "evaluate at an integer point"), ("poly", "print the symbolic value")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--seq", required=True, choices=seqs)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int)
        if name == "eval":
            p.add_argument("--s", type=int, required=True)
            p.add_argument("--t", type=int, required=True)

    p = sub.add_parser("verify", help="run the property suite and the reference tables")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--format", default="text", choices=FORMATS)
    p.add_argument("--only", help="comma-separated check ids")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "table":
        if args.rows < 0:
            parser.error("--rows must be >= 0")
        print(render_table(sq.SequenceId(args.seq), args.rows, args.format))
        return 0

    if args.command in ("eval", "poly"):
        try:
            v = sq.value(args.seq, args.n, args.k)
        except ValueError as exc:
            parser.error(str(exc))
        if args.command == "poly":
            print(v)
            return 0
        try:
            print(_format_number(v.eval_int(args.s, args.t)))
        except ZeroDivisionError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        return 0

    if args.max_n < 0:
        parser.error("--max-n must be >= 0")
    selection = None
    if args.only:
        selection = [x.strip() for x in args.only.split(",") if x.strip()]
    try:
        report = vf.run_suite(args.max_n, selection)
    except ValueError as exc:
        parser.error(str(exc))
    if selection is None:
        report = report + vf.golden_tables(min(args.max_n, 5))
    print(render_report(report, args.format))
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
