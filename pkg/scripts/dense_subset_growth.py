"""Minimum dense-subset size against the level count k on the signed grids.

The alternating chain and the reciprocal-dominance grid both need k
witnesses, so no fixed finite subset serves every truncation.
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from ordim.generators import prop2_extension, prop14_grid
from ordim.poset import minimum_dense_subset


@dataclass(frozen=True)
class GrowthConfig:
    k_min: int = 1
    k_max: int = 7
    mode: str = "debreu"


def main(cfg: GrowthConfig) -> list:
    rows = []
    print(f"{'k':>3} {'alternating chain':>18} {'reciprocal grid':>16} {'secs':>6}")
    for k in range(cfg.k_min, cfg.k_max + 1):
        t = time.perf_counter()
        a = minimum_dense_subset(prop2_extension(k), cfg.mode)
        b = minimum_dense_subset(prop14_grid(k)[0], cfg.mode)
        secs = time.perf_counter() - t
        rows.append((k, len(a), len(b)))
        flag = "" if a.exact and b.exact else " (greedy)"
        print(f"{k:>3} {len(a):>18} {len(b):>16} {secs:>6.2f}{flag}")
    return rows


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-max", type=int, default=GrowthConfig.k_max)
    ap.add_argument("--mode", choices=["debreu", "upper"], default="debreu")
    a = ap.parse_args()
    main(GrowthConfig(k_max=a.k_max, mode=a.mode))
