"""Command line: ``jordan rep``, ``jordan cgc``, ``jordan verify``.

Every spin or weight flag takes a doubled integer: ``--j 3`` means j = 3/2.
"""
from __future__ import annotations

import argparse
import sys

from . import serialize, su2, suites
from .cgc import coupled_spins, deformed_cgc_table, triangle
from .exact import HalfInt, HPoly, Mat
from .jordanian import GENERATOR_TAGS, generator_matrix

FORMATS = ("text", "json", "latex")


def _twice(text: str) -> HalfInt:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a doubled integer, got {text!r}") from None
    return HalfInt(value)


def _spin(text: str) -> HalfInt:
    j = _twice(text)
    if j.twice < 0:
        raise argparse.ArgumentTypeError(f"spin must be non-negative, got 2j = {j.twice}")
    return j


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("expected a non-negative integer")
    return value


# ------------------------------------------------------------ rendering


def _text_grid(header: list[str], rows: list[list[str]]) -> str:
    table = [header] + rows
    widths = [max(len(r[c]) for r in table) for c in range(len(header))]
    return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip() for r in table)


def render_matrix_text(m: Mat, labels: list[str]) -> str:
    rows = [[labels[i]] + [str(HPoly.coerce(m[i, c])) for c in range(m.cols)] for i in range(m.rows)]
    return _text_grid([""] + labels, rows)


def render_matrix_latex(m: Mat) -> str:
    body = " \\\\\n".join(" & ".join(HPoly.coerce(m[i, c]).latex() for c in range(m.cols))
                          for i in range(m.rows))
    return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"


def _lbl(x: HalfInt) -> str:
    return str(x)


def render_table_text(table) -> str:
    cols = [(j, m) for j, m in table.column_labels()
            if any(k[0] == j and k[3] == m for k in table.entries)]
    if not cols:
        return "(empty table)"
    header = ["n1,n2"] + [f"j={_lbl(j)},m={_lbl(m)}" for j, m in cols]
    rows = [[f"{_lbl(n1)},{_lbl(n2)}"] + [str(table.entries[(j, n1, n2, m)]) for j, m in cols]
            for n1, n2 in table.row_labels()]
    return _text_grid(header, rows)


def render_table_latex(table) -> str:
    cols = [(j, m) for j, m in table.column_labels()
            if any(k[0] == j and k[3] == m for k in table.entries)]
    if not cols:
        return ""
    head = " & ".join(f"({j.latex()},{m.latex()})" for j, m in cols)
    lines = [f"\\begin{{array}}{{c|{'c' * len(cols)}}}", f"(n_1,n_2) & {head} \\\\ \\hline"]
    for n1, n2 in table.row_labels():
        cells = " & ".join(table.entries[(j, n1, n2, m)].latex() for j, m in cols)
        lines.append(f"({n1.latex()},{n2.latex()}) & {cells} \\\\")
    lines.append("\\end{array}")
    return "\n".join(lines)


# ------------------------------------------------------------ commands


def cmd_rep(args) -> int:
    j = args.j
    m = generator_matrix(args.gen, j)
    if args.basis == "e":
        m = su2.to_e_basis(m, j)
    if args.format == "json":
        rec = serialize.OutputRecord(
            {"name": "rep", "j": j.twice, "gen": args.gen, "basis": args.basis},
            {"kind": "matrix", "matrix": serialize.encode_matrix(m)})
        print(rec.to_json())
    elif args.format == "latex":
        print(render_matrix_latex(m))
    else:
        labels = [f"m={_lbl(w)}" for w in su2.rep_space(j).weights()]
        print(f"{args.gen} on V^({j}), {args.basis}-basis; column = source vector")
        print(render_matrix_text(m, labels))
    return 0


def cmd_cgc(args) -> int:
    j1, j2 = args.j1, args.j2
    table = deformed_cgc_table(j1, j2)
    if args.j is not None or args.m is not None:
        if args.j is not None and not triangle(j1, j2, args.j):
            print(f"warning: j={args.j} is not in {[str(s) for s in coupled_spins(j1, j2)]}; empty table",
                  file=sys.stderr)
        elif args.m is not None and (args.m.twice + j1.twice + j2.twice) % 2:
            print(f"warning: m={args.m} has the wrong parity for j1+j2; empty table", file=sys.stderr)
        table = table.filtered(args.j, args.m)
        if not table.entries and args.j is not None and triangle(j1, j2, args.j):
            print(f"warning: m={args.m} is out of range for j={args.j}; empty table", file=sys.stderr)
    if args.format == "json":
        command = {"name": "cgc", "j1": j1.twice, "j2": j2.twice,
                   "j": None if args.j is None else args.j.twice,
                   "m": None if args.m is None else args.m.twice}
        rec = serialize.OutputRecord(command, {"kind": "cgc_table", "table": serialize.encode_table(table)})
        print(rec.to_json())
    elif args.format == "latex":
        print(render_table_latex(table))
    else:
        print(f"deformed Clebsch-Gordan coefficients for j1={j1}, j2={j2}; rows (n1,n2), columns (j,m)")
        print(render_table_text(table))
    return 0


def cmd_verify(args) -> int:
    max_2j = suites.default_max_2j() if args.max_2j is None else args.max_2j
    report = suites.run_suite(args.suite, max_2j, args.seed)
    if args.format == "json":
        rec = serialize.OutputRecord(
            {"name": "verify", "suite": args.suite, "max_2j": max_2j, "seed": args.seed},
            {"kind": "report", "report": serialize.encode_report(report)})
        print(rec.to_json())
    else:
        print(report)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jordan", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("rep", help="generator matrix on V^(j)")
    rep.add_argument("--j", type=_spin, required=True, metavar="TWICE_J")
    rep.add_argument("--gen", choices=GENERATOR_TAGS, default="H")
    rep.add_argument("--basis", choices=("v", "e"), default="v")
    rep.add_argument("--format", choices=FORMATS, default="text")
    rep.set_defaults(func=cmd_rep)

    cg = sub.add_parser("cgc", help="deformed Clebsch-Gordan table")
    cg.add_argument("--j1", type=_spin, required=True, metavar="TWICE_J1")
    cg.add_argument("--j2", type=_spin, required=True, metavar="TWICE_J2")
    cg.add_argument("--j", type=_spin, default=None, metavar="TWICE_J")
    cg.add_argument("--m", type=_twice, default=None, metavar="TWICE_M")
    cg.add_argument("--format", choices=FORMATS, default="text")
    cg.set_defaults(func=cmd_cgc)

    ver = sub.add_parser("verify", help="run exact verification suites")
    ver.add_argument("--suite", choices=suites.SUITES + ("all",), default="all")
    ver.add_argument("--max-2j", dest="max_2j", type=_non_negative, default=None,
                     help=f"spin bound (default $JORDAN_MAX_2J or {suites.DEFAULT_MAX_2J})")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--format", choices=("text", "json"), default="text")
    ver.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
