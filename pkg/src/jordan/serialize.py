"""JSON encoding for matrices, CGC tables and reports (schema "jordan-cgc/1").

Half-integers are written as doubled integers. A SqrtRat is a list of
{"radicand", "num", "den"} terms, an h-polynomial a degree-indexed list of
SqrtRat values. Rational coefficients are written as SqrtRat with radicand 1.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .exact import Q, HalfInt, HPoly, Mat, SqrtRat, as_rational
from .report import Check, Report

SCHEMA = "jordan-cgc/1"


def encode_scalar(x) -> list[dict]:
    x = SqrtRat.coerce(x) if not isinstance(x, SqrtRat) else x
    return [{"radicand": r, "num": int(q.numerator), "den": int(q.denominator)} for r, q in x.terms]


def decode_scalar(terms: list[dict]) -> SqrtRat:
    return SqrtRat([(t["radicand"], Q(t["num"], t["den"])) for t in terms])


def encode_hpoly(p) -> list[list[dict]]:
    return [encode_scalar(c) for c in HPoly.coerce(p).coeffs]


def decode_hpoly(data: list) -> HPoly:
    return HPoly(decode_scalar(c) for c in data)


def encode_matrix(m: Mat) -> dict:
    return {"rows": m.rows, "cols": m.cols,
            "entries": [[encode_hpoly(x) for x in m.row(i)] for i in range(m.rows)]}


def decode_matrix(data: dict) -> Mat:
    return Mat.from_rows([[decode_hpoly(x) for x in row] for row in data["entries"]]) if data["rows"] \
        else Mat(0, data["cols"], ())


def encode_table(table) -> dict:
    return {
        "j1": table.j1.twice,
        "j2": table.j2.twice,
        "rows": [[a.twice, b.twice] for a, b in table.row_labels()],
        "columns": [[a.twice, b.twice] for a, b in table.column_labels()],
        "entries": [{"j": j.twice, "n1": n1.twice, "n2": n2.twice, "m": m.twice, "value": encode_hpoly(v)}
                    for (j, n1, n2, m), v in table.entries.items()],
    }


def decode_table(data: dict):
    from .cgc import CgcTable

    entries = {(HalfInt(e["j"]), HalfInt(e["n1"]), HalfInt(e["n2"]), HalfInt(e["m"])): decode_hpoly(e["value"])
               for e in data["entries"]}
    return CgcTable(HalfInt(data["j1"]), HalfInt(data["j2"]), entries)


def encode_report(r: Report) -> dict:
    return {"title": r.title, "passed": r.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in r.checks]}


def decode_report(data: dict) -> Report:
    return Report(data["title"], [Check(c["name"], c["passed"], c["detail"]) for c in data["checks"]])


@dataclass
class OutputRecord:
    command: dict
    payload: dict
    schema: str = SCHEMA
    extra: dict = field(default_factory=dict)

    def to_json(self) -> str:
        body = {"schema": self.schema, "command": self.command, "payload": self.payload}
        body.update(self.extra)
        return json.dumps(body, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        data = json.loads(text)
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported schema {data.get('schema')!r}")
        extra = {k: v for k, v in data.items() if k not in ("schema", "command", "payload")}
        return cls(data["command"], data["payload"], data["schema"], extra)


def rational_from_json(num: int, den: int):
    return as_rational(Q(num, den))
