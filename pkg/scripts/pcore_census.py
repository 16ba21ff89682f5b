"""Count p-cores among all CRGs with at most k vertices, and how many have the predicted edge structure.

    python3 scripts/pcore_census.py --max-k 4 --p 1/4 2/5 1/2 3/5 3/4
"""

import argparse
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from edl.crg import g, is_p_core
from edl.enumeration import enumerate_crgs
from edl.io import parse_rational


@dataclass
class Config:
    max_k: int = 4
    p: list = field(default_factory=lambda: [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)])


def run(cfg: Config):
    crgs = list(enumerate_crgs(cfg.max_k))
    for p in cfg.p:
        shaped = {K.to_text() for K in enumerate_crgs(cfg.max_k, p)}
        per_k, off_shape = Counter(), 0
        for K in crgs:
            if is_p_core(K, p, g(K, p)):
                per_k[K.k] += 1
                off_shape += K.to_text() not in shaped
        counts = ", ".join(f"k={k}: {per_k[k]}" for k in sorted(per_k))
        print(f"p = {p}: {sum(per_k.values())} cores ({counts}); outside the predicted structure: {off_shape}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-k", type=int, default=Config.max_k)
    ap.add_argument("--p", type=parse_rational, nargs="+", default=Config().p)
    run(Config(**vars(ap.parse_args())))
