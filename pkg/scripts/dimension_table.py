"""Dimension of the example families, with search time and exactness."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from ordim.dimension import dimension
from ordim.generators import (
    embed_standard_example_in_majorization,
    figure1,
    majorization_grid,
    prop14_grid,
    standard_example,
    theorem12_grid,
)
from ordim.poset import Poset


@dataclass(frozen=True)
class TableConfig:
    max_standard: int = 6
    max_grid: int = 6
    majorization: tuple = ((3, 6), (3, 12), (4, 8), (5, 10))


def cases(cfg: TableConfig):
    yield "chain(5)", Poset.chain(list("abcde"))
    yield "antichain(3)", Poset.antichain(list("abc"))
    yield "crown", figure1()
    for n in range(2, cfg.max_standard + 1):
        yield f"standard_example({n})", standard_example(n)
    for k in (2, cfg.max_grid):
        yield f"theorem12_grid({k})", theorem12_grid(k)[0]
        yield f"prop14_grid({k})", prop14_grid(k)[0]
    for n, d in cfg.majorization:
        yield f"majorization_grid({n},{d})", majorization_grid(n, d)[0]
    for n in (4, 5, 6):
        yield f"embedded standard example, {n} outcomes", embed_standard_example_in_majorization(n).poset


def main(cfg: TableConfig) -> None:
    print(f"{'poset':<42} {'n':>3} {'dim':>4} {'exact':>6} {'secs':>6}")
    for name, p in cases(cfg):
        t = time.perf_counter()
        c = dimension(p)
        print(f"{name:<42} {p.n:>3} {c.value:>4} {str(c.exact):>6} {time.perf_counter() - t:>6.2f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-standard", type=int, default=TableConfig.max_standard)
    a = ap.parse_args()
    main(TableConfig(max_standard=a.max_standard))
