"""Print the deformed CGCs for j1 = j2 = 2, j = 3 next to their classical values."""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from jordan.cgc import classical_cgc, deformed_cgc_table
from jordan.exact import HalfInt


@dataclass(frozen=True)
class Config:
    twice_j1: int = 4
    twice_j2: int = 4
    twice_j: int = 6
    latex: bool = False


def run(cfg: Config) -> list[tuple]:
    j1, j2, j = HalfInt(cfg.twice_j1), HalfInt(cfg.twice_j2), HalfInt(cfg.twice_j)
    table = deformed_cgc_table(j1, j2).filtered(j=j)
    rows = []
    for (_, n1, n2, m), val in sorted(table.entries.items(), key=lambda kv: (-kv[0][3].twice, -kv[0][1].twice)):
        if val:
            rows.append((n1, n2, m, val, classical_cgc(j1, j2, j, n1, n2, m)))
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--j1", type=int, default=Config.twice_j1, help="doubled j1")
    p.add_argument("--j2", type=int, default=Config.twice_j2, help="doubled j2")
    p.add_argument("--j", type=int, default=Config.twice_j, help="doubled j")
    p.add_argument("--latex", action="store_true")
    a = p.parse_args()
    cfg = Config(a.j1, a.j2, a.j, a.latex)
    print(f"nonzero entries for j1={HalfInt(cfg.twice_j1)}, j2={HalfInt(cfg.twice_j2)}, j={HalfInt(cfg.twice_j)}")
    print(f"{'n1':>5} {'n2':>5} {'m':>5}  {'deformed':<28} classical")
    for n1, n2, m, val, cl in run(cfg):
        shown = val.latex() if cfg.latex else str(val)
        print(f"{str(n1):>5} {str(n2):>5} {str(m):>5}  {shown:<28} {cl}")


if __name__ == "__main__":
    main()
