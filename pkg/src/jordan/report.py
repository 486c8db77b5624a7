"""Pass/fail records shared by the verifiers."""
from __future__ import annotations

from dataclasses import dataclass, field

from .exact import Mat, first_mismatch


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def add(self, name: str, passed: bool, detail: str = "") -> Check:
        c = Check(name, bool(passed), detail)
        self.checks.append(c)
        return c

    def add_matrix_eq(self, name: str, lhs: Mat, rhs: Mat, labels=None) -> Check:
        bad = first_mismatch(lhs, rhs)
        if bad is None:
            return self.add(name, True)
        i, j, a, b = bad
        where = f"({labels[i]}, {labels[j]})" if labels else f"({i}, {j})"
        return self.add(name, False, f"entry {where}: {a} != {b}")

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.detail))

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]

    def __str__(self):
        head = f"{self.title}: {'PASS' if self.passed else 'FAIL'} ({len(self.checks)} checks)"
        return "\n".join([head, *("  " + s for s in self.lines())])
