"""Exact order dimension of finite posets.

On a finite ground set every total order has a utility, so all three notions
coincide; the realizer search runs once and the certificate is relabelled per
kind.  The search assigns each critical pair to one of ``t`` partial orders
(colours) in which it gets reversed, keeping every colour acyclic.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from .config import SearchConfig, default_config
from .extension import canonical_linear_extension
from .poset import Poset
from .representations import MultiUtility, Realizer, realizer_to_injective_multi_utility

KINDS = ("dushnik_miller", "geometrical", "debreu")


@dataclass(frozen=True)
class DimensionCertificate:
    kind: str
    value: int
    witness: Union[Realizer, MultiUtility]
    lower_bound_proof: tuple  # obligations no realizer of size value-1 reverses
    exact: bool = True
    lower: int = field(default=0)

    def to_json(self) -> dict:
        w = self.witness
        return {
            "kind": self.kind,
            "value": self.value,
            "exact": self.exact,
            "lower_bound": self.lower,
            "lower_bound_proof": [list(pr) for pr in self.lower_bound_proof],
            "witness": w.to_json(),
        }


def critical_pairs(p: Poset) -> list:
    """Every ordered incomparable pair ``(x, y)``; a family of linear
    extensions is a realizer iff each such pair has a member placing ``y``
    before ``x``."""
    inc = p.incomparable_matrix
    return [(p.labels[i], p.labels[j]) for i, j in zip(*np.nonzero(inc))]


def _obligations(p: Poset) -> list:
    """Incomparable pairs (x, y) with down(x) within down(y) and up(y) within
    up(x); reversing these reverses every incomparable pair."""
    s = p.strict
    inc = p.incomparable_matrix
    out = []
    for i, j in zip(*np.nonzero(inc)):
        if (s[:, i] & ~s[:, j]).any() or (s[j, :] & ~s[i, :]).any():
            continue
        out.append((int(i), int(j)))
    return out


class _Colours:
    """``t`` partial orders on range(n) as up/down bitsets."""

    def __init__(self, up: list, down: list):
        self.up = up  # up[c][i]: mask of elements >= i in colour c
        self.down = down

    def copy(self) -> "_Colours":
        return _Colours([list(u) for u in self.up], [list(d) for d in self.down])

    def satisfied(self, c: int, x: int, y: int) -> bool:
        return bool(self.up[c][y] >> x & 1)

    def feasible(self, c: int, x: int, y: int) -> bool:
        return not self.up[c][x] >> y & 1

    def reverse(self, c: int, x: int, y: int) -> None:
        """Add y <= x to colour c and close transitively."""
        up, down = self.up[c], self.down[c]
        ux, dy = up[x], down[y]
        a = dy
        while a:
            low = a & -a
            i = low.bit_length() - 1
            up[i] |= ux
            a ^= low
        b = ux
        while b:
            low = b & -b
            i = low.bit_length() - 1
            down[i] |= dy
            b ^= low


def _initial(p: Poset, t: int) -> _Colours:
    n = p.n
    up = [sum(1 << j for j in range(n) if p.rel[i, j]) for i in range(n)]
    down = [sum(1 << i for i in range(n) if p.rel[i, j]) for j in range(n)]
    return _Colours([list(up) for _ in range(t)], [list(down) for _ in range(t)])


def _search(p: Poset, t: int, obligations: list) -> Optional[_Colours]:
    """Colour every obligation with one of ``t`` colours, or None."""
    state = _initial(p, t)

    def solve(st: _Colours, used: int) -> Optional[_Colours]:
        best, best_opts = None, None
        for x, y in obligations:
            if any(st.satisfied(c, x, y) for c in range(used)):
                continue
            opts = [c for c in range(used) if st.feasible(c, x, y)]
            if used < t:
                opts.append(used)
            if not opts:
                return None
            if best_opts is None or len(opts) < len(best_opts):
                best, best_opts = (x, y), opts
                if len(opts) == 1:
                    break
        if best is None:
            return st
        x, y = best
        for c in best_opts:
            nxt = st.copy()
            nxt.reverse(c, x, y)
            got = solve(nxt, max(used, c + 1))
            if got is not None:
                return got
        return None

    return solve(state, 0)


def _greedy(p: Poset, obligations: list) -> _Colours:
    t = max(1, len(obligations))
    st = _initial(p, t)
    used = 1
    for x, y in obligations:
        if any(st.satisfied(c, x, y) for c in range(used)):
            continue
        c = next((c for c in range(used) if st.feasible(c, x, y)), used)
        st.reverse(c, x, y)
        used = max(used, c + 1)
    st.up, st.down = st.up[:used], st.down[:used]
    return st


def _members(p: Poset, st: _Colours) -> tuple:
    n = p.n
    out = []
    for up in st.up:
        rel = np.array([[bool(up[i] >> j & 1) for j in range(n)] for i in range(n)])
        order = canonical_linear_extension(Poset(p.labels, rel, check=False))
        out.append(Poset.from_order(p.labels, order))
    # lexicographic member order for determinism
    out.sort(key=lambda q: q.linear_order())
    return tuple(out)


@dataclass(frozen=True)
class _Result:
    value: int
    realizer: Realizer
    proof: tuple
    exact: bool
    lower: int


@functools.lru_cache(maxsize=256)
def _solve(p: Poset, cap: int) -> _Result:
    if p.is_total():
        return _Result(1, Realizer(p, (p,)), (), True, 1)
    obligations = _obligations(p)
    proof = tuple((p.labels[x], p.labels[y]) for x, y in obligations)
    st = _search(p, 2, obligations)
    if st is not None:
        return _Result(2, Realizer(p, _members(p, st)), proof, True, 2)
    if p.n > cap:
        st = _greedy(p, obligations)
        # a greedy realizer of size 3 meets the lower bound
        return _Result(len(st.up), Realizer(p, _members(p, st)), proof, len(st.up) == 3, 3)
    t = 3
    while True:
        st = _search(p, t, obligations)
        if st is not None:
            return _Result(t, Realizer(p, _members(p, st)), proof, True, t)
        t += 1


def dimension(p: Poset, kind: str = "dushnik_miller", config: Optional[SearchConfig] = None) -> DimensionCertificate:
    """Smallest realizer size with a witness.

    Above ``config.dimension_cap`` elements only totality and the two-member
    test are exhaustive.  Beyond that the value is the size of a greedily
    found realizer with 3 as ``lower``, and ``exact`` holds only when the two
    agree.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown dimension kind {kind!r}")
    config = config or default_config()
    res = _solve(p, config.dimension_cap)
    witness = res.realizer
    if kind == "geometrical":
        witness = realizer_to_injective_multi_utility(res.realizer)
    return DimensionCertificate(kind, res.value, witness, res.proof, res.exact, res.lower)


def refutes(p: Poset, t: int) -> bool:
    """True iff no realizer with ``t`` members exists (exhaustive)."""
    if t >= 1 and p.is_total():
        return False
    return _search(p, t, _obligations(p)) is None if t >= 1 else True
