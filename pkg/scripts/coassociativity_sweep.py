"""Time the coassociativity check over every triple up to a dimension cap."""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from jordan.suites import spin_triples
from jordan.tensor import DEFAULT_TRIPLE_DIM_CAP, verify_coassociativity


@dataclass(frozen=True)
class Config:
    max_dim: int = DEFAULT_TRIPLE_DIM_CAP
    slowest: int = 5


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-dim", type=int, default=Config.max_dim)
    p.add_argument("--slowest", type=int, default=Config.slowest)
    a = p.parse_args()
    cfg = Config(a.max_dim, a.slowest)
    timings, failed = [], []
    start = time.perf_counter()
    for tr in spin_triples(cfg.max_dim - 1, cfg.max_dim):
        t = time.perf_counter()
        r = verify_coassociativity(*tr, max_dim=cfg.max_dim)
        timings.append((time.perf_counter() - t, tr))
        if not r.passed:
            failed.append((tr, r.first_failure))
    total = time.perf_counter() - start
    print(f"{len(timings)} triples, {len(failed)} failures, {total:.1f}s")
    for dt, tr in sorted(timings, reverse=True)[:cfg.slowest]:
        print(f"  {dt:6.2f}s  ({', '.join(str(j) for j in tr)})")
    for tr, chk in failed:
        print("FAIL", tr, chk.line())


if __name__ == "__main__":
    main()
