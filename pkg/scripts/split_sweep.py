"""Check the split-graph edit-distance formula over a range of (alpha, omega).

    python3 scripts/split_sweep.py --max-sum 7
"""

import argparse
import time
from dataclasses import dataclass

from edl import verify as V
from edl.config import max_k_cap
from edl.edf import dyadic_grid, split_edf


@dataclass
class Config:
    max_sum: int = 7  # largest alpha + omega; enumeration runs to alpha + omega - 1 vertices
    grid: int = 32
    workers: int = 1


def run(cfg: Config):
    print(f"{'alpha':>5} {'omega':>5} {'max_k':>5} {'result':>6} {'secs':>7}  envelope")
    for total in range(4, cfg.max_sum + 1):
        for omega in range(2, total - 1):
            alpha = total - omega
            max_k = min(alpha + omega - 1, max_k_cap())
            t0 = time.perf_counter()
            checks = V.verify_split(alpha, omega, max_k, dyadic_grid(cfg.grid), workers=cfg.workers)
            ok = V.all_passed(checks)
            print(f"{alpha:>5} {omega:>5} {max_k:>5} {'PASS' if ok else 'FAIL':>6} "
                  f"{time.perf_counter() - t0:>7.1f}  {split_edf(alpha, omega)}")
            for c in checks:
                if not c.passed:
                    print("      " + c.line())


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-sum", type=int, default=Config.max_sum)
    ap.add_argument("--grid", type=int, default=Config.grid)
    ap.add_argument("--workers", type=int, default=Config.workers)
    run(Config(**vars(ap.parse_args())))
