"""List, per (j1, j2), whether the deformed coupling matrix fails to be orthogonal."""
from __future__ import annotations

import argparse
import os
from dataclasses import dataclass

from jordan.cgc import demonstrate_non_orthogonality, describe_witness
from jordan.suites import spin_pairs


@dataclass(frozen=True)
class Config:
    max_2j: int = int(os.environ.get("JORDAN_MAX_2J", 8))


def run(cfg: Config):
    for j1, j2 in spin_pairs(cfg.max_2j):
        res = demonstrate_non_orthogonality(j1, j2)
        yield j1, j2, res


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-2j", type=int, default=Config.max_2j)
    cfg = Config(p.parse_args().max_2j)
    found = 0
    for j1, j2, res in run(cfg):
        found += res.deviates
        flag = "M(0) orthogonal, M(h) invertible" if res.report.passed else "CHECK FAILED"
        print(f"({j1}, {j2}): {flag}; {describe_witness(res)}")
    print(f"{found} pairs with a non-identity Gramian")


if __name__ == "__main__":
    main()
