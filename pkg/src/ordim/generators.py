"""Constructors for the example posets, truncated to finite grids.

Signed grids use the ground set {-k, ..., -1, 1, ..., k} with labels
``"-2"``, ``"1"`` etc.  Majorization points are exact rational tuples labelled
``"(4,1,1)/6"``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import BadParams, ConstructionFailed
from .poset import Poset, from_cover_relations, is_order_isomorphic, transitive_closure
from .representations import MultiUtility

FAMILIES = (
    "figure1",
    "prop2_grid",
    "prop2_extension",
    "theorem12_grid",
    "prop14_grid",
    "lex_grid",
    "standard_example",
    "majorization_grid",
    "majorization_embedding",
)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict)


def _by_comparison(labels: Sequence[str], points: Sequence, le: Callable) -> Poset:
    rel = np.array([[bool(le(a, b)) for b in points] for a in points], dtype=bool)
    return Poset(labels, rel)


def _signed(k: int) -> list:
    if k < 1:
        raise BadParams(f"level count k must be >= 1, got {k}")
    return list(range(-k, 0)) + list(range(1, k + 1))


def _sgn(x: int) -> int:
    return 1 if x > 0 else -1


# ------------------------------------------------------------ families


def figure1() -> Poset:
    return from_cover_relations(
        list("ABCDEF"),
        [("A", "C"), ("B", "C"), ("D", "E"), ("D", "F"), ("A", "F"), ("B", "E")],
    )


def prop2_grid(k: int) -> tuple:
    """Two opposite chains: positives ordered by size, negatives by modulus."""
    pts = _signed(k)
    p = _by_comparison(
        [str(x) for x in pts], pts,
        lambda x, y: (x > 0 and y > 0 and x <= y) or (x < 0 and y < 0 and y <= x),
    )
    mu = MultiUtility.from_functions(p, [
        lambda s: abs(int(s)),
        lambda s: 1 if int(s) > 0 else 0,
        lambda s: 1 if int(s) < 0 else 0,
    ])
    return p, mu


def prop2_extension(k: int) -> Poset:
    """The chain -1 < 1 < -2 < 2 < ... extending ``prop2_grid(k)``."""
    pts = _signed(k)

    def le(x, y):
        if (x > 0 and y > 0 and x <= y) or (x < 0 and y < 0 and y <= x):
            return True
        if x * y < 0 and abs(x) < abs(y):
            return True
        return x < 0 < y and abs(x) == abs(y)

    return _by_comparison([str(x) for x in pts], pts, le)


def theorem12_grid(k: int) -> tuple:
    """``x <= y`` iff ``|x| <= |y|`` and ``sgn x <= sgn y``."""
    pts = _signed(k)
    p = _by_comparison(
        [str(x) for x in pts], pts,
        lambda x, y: abs(x) <= abs(y) and _sgn(x) <= _sgn(y),
    )
    mu = MultiUtility.from_functions(p, [lambda s: abs(int(s)), lambda s: _sgn(int(s))])
    return p, mu


def prop14_grid(k: int) -> tuple:
    """Dominance for (x, 1/x): negatives below positives, otherwise antichains."""
    pts = _signed(k)
    p = _by_comparison(
        [str(x) for x in pts], pts,
        lambda x, y: x <= y and Fraction(1, x) <= Fraction(1, y),
    )
    mu = MultiUtility.from_functions(p, [lambda s: int(s), lambda s: Fraction(1, int(s))])
    return p, mu


def lex_grid(a: int, b: int) -> Poset:
    """Lexicographic order on {0..a-1} x {0..b-1}; labels ``"i,j"``."""
    if a < 1 or b < 1:
        raise BadParams("lex_grid extents must be >= 1")
    pts = [(i, j) for i in range(a) for j in range(b)]
    return _by_comparison([f"{i},{j}" for i, j in pts], pts, lambda x, y: x <= y)


def standard_example(n: int) -> Poset:
    """Minimals a1..an, maximals b1..bn, ``ai < bj`` iff ``i != j``."""
    if n < 2:
        raise BadParams("standard_example needs n >= 2")
    labels = [f"a{i}" for i in range(1, n + 1)] + [f"b{i}" for i in range(1, n + 1)]
    covers = [(f"a{i}", f"b{j}") for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    return from_cover_relations(labels, covers)


# --------------------------------------------------------- majorization


def majorization_label(dist: Sequence[Fraction], d: int) -> str:
    return "(" + ",".join(str(int(v * d)) for v in dist) + f")/{d}"


def partial_sums(dist: Sequence[Fraction]) -> tuple:
    out, s = [], Fraction(0)
    for v in dist:
        s += v
        out.append(s)
    return tuple(out)


def majorizes(p: Sequence[Fraction], q: Sequence[Fraction]) -> bool:
    """``p <=_m q``: every proper partial sum of p is at most q's."""
    return all(a <= b for a, b in zip(partial_sums(p)[:-1], partial_sums(q)[:-1]))


def _partitions(total: int, parts: int, cap: int):
    """Non-increasing ``parts``-tuples of non-negative ints <= cap summing to total."""
    if parts == 1:
        if total <= cap:
            yield (total,)
        return
    for first in range(min(total, cap), -1, -1):
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def _majorization_poset(dists: Sequence[tuple], d: int) -> tuple:
    labels = [majorization_label(x, d) for x in dists]
    p = _by_comparison(labels, dists, majorizes)
    n = len(dists[0])
    mu = MultiUtility(tuple(tuple(partial_sums(x)[i] for x in dists) for i in range(n - 1)))
    return p, mu


def majorization_grid(n: int, d: int) -> tuple:
    """Non-increasing distributions on n outcomes with entries in (1/d)Z."""
    if n < 2 or d < 1:
        raise BadParams("majorization_grid needs n >= 2 and denom >= 1")
    dists = [tuple(Fraction(v, d) for v in t) for t in _partitions(d, n, d)]
    return _majorization_poset(dists, d)


@dataclass(frozen=True)
class Embedding:
    """A finite poset realised inside majorization."""

    poset: Poset  # majorization restricted to the chosen points
    multi_utility: MultiUtility
    denom: int
    points: dict  # label -> distribution
    mapping: dict  # source label -> majorization label


def _common_denom(points: Sequence[tuple]) -> int:
    return lcm(*(v.denominator for x in points for v in x))


def _build_embedding(source: Poset, pts: dict) -> Embedding:
    d = _common_denom(list(pts.values()))
    for x in pts.values():
        if sum(x) != 1 or any(a < b for a, b in zip(x, x[1:])) or x[-1] < 0:
            raise ConstructionFailed(f"{x} is not a non-increasing distribution")
    src = list(source.labels)
    dists = [pts[s] for s in src]
    if len(set(dists)) != len(dists):
        raise ConstructionFailed("points are not distinct")
    sub, mu = _majorization_poset(dists, d)
    mapping = dict(zip(src, sub.labels))
    for a in src:
        for b in src:
            if source.le(a, b) != sub.le(mapping[a], mapping[b]):
                raise ConstructionFailed(f"order of ({a}, {b}) not preserved")
    if is_order_isomorphic(source, sub) is None:
        raise ConstructionFailed("isomorphism check failed")
    return Embedding(sub, mu, d, {mapping[s]: pts[s] for s in src}, mapping)


def embed_theorem12_in_majorization(k: int) -> Embedding:
    """``theorem12_grid(k)`` inside three-outcome majorization.

    Positive level x maps to ``(t, 3/8 - (t - 1/2), 1/8)`` and -x to
    ``(t, 5/16 - (t - 1/2), 3/16)`` with ``t = 1/2 + x / (16 (k + 1))``: the
    first partial sum follows the modulus, the second separates the signs.
    """
    if k < 1:
        raise BadParams("k must be >= 1")
    eps, gamma = Fraction(1, 8), Fraction(1, 16)
    half = Fraction(1, 2)
    pts = {}
    for x in range(1, k + 1):
        t = half + Fraction(x, 16 * (k + 1))
        pts[str(x)] = (t, Fraction(1, 4) + eps - (t - half), Fraction(1, 4) - eps)
        pts[str(-x)] = (t, Fraction(1, 4) + eps - (t - half) - gamma, Fraction(1, 4) - eps + gamma)
    source, _ = theorem12_grid(k)
    return _build_embedding(source, pts)


def embed_standard_example_in_majorization(n: int) -> Embedding:
    """``standard_example(n - 1)`` inside majorization on n outcomes.

    Partial sums of a strictly decreasing base point are shifted by
    ``delta * e_i`` for the minimal a_i and by ``delta * (1 - e_i)`` for the
    maximal b_i; ``delta`` is small enough to keep every point non-increasing.
    """
    if not 4 <= n <= 6:
        raise BadParams("embed_standard_example_in_majorization supports 4 <= n <= 6")
    m = n - 1
    base = [Fraction(2 * (n - i), n * (n + 1)) for i in range(n)]
    s0 = partial_sums(base)[:m]
    delta = Fraction(1, 2 * n * (n + 1))

    def point(shift):
        s = [a + delta * v for a, v in zip(s0, shift)]
        full = s + [Fraction(1)]
        return tuple(b - a for a, b in zip([Fraction(0)] + full[:-1], full))

    pts = {}
    for i in range(m):
        e = [1 if j == i else 0 for j in range(m)]
        pts[f"a{i + 1}"] = point(e)
        pts[f"b{i + 1}"] = point([1 - v for v in e])
    return _build_embedding(standard_example(m), pts)


# ------------------------------------------------------------- dispatch


def generate(spec: FamilySpec) -> tuple:
    """Return ``(poset, canonical multi-utility or None)``."""
    f, prm = spec.family, dict(spec.params)

    def need(name):
        if prm.get(name) is None:
            raise BadParams(f"family {f!r} needs parameter {name!r}")
        return int(prm[name])

    if f == "figure1":
        return figure1(), None
    if f == "prop2_grid":
        return prop2_grid(need("k"))
    if f == "prop2_extension":
        return prop2_extension(need("k")), None
    if f == "theorem12_grid":
        return theorem12_grid(need("k"))
    if f == "prop14_grid":
        return prop14_grid(need("k"))
    if f == "lex_grid":
        return lex_grid(need("a"), need("b")), None
    if f == "standard_example":
        return standard_example(need("n")), None
    if f == "majorization_grid":
        return majorization_grid(need("n"), need("denom"))
    if f == "majorization_embedding":
        if prm.get("k") is not None:
            e = embed_theorem12_in_majorization(need("k"))
        else:
            e = embed_standard_example_in_majorization(need("n"))
        return e.poset, e.multi_utility
    raise BadParams(f"unknown family {f!r}")


# ------------------------------------------------------ random corpora


def random_poset(n: int, density: float = 0.3, rng: Optional[random.Random] = None) -> Poset:
    """Closure of a random DAG on a shuffled order; labels ``x0..x{n-1}``."""
    rng = rng or random.Random()
    perm = list(range(n))
    rng.shuffle(perm)
    rel = np.eye(n, dtype=bool)
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < density:
                rel[perm[a], perm[b]] = True
    return Poset([f"x{i}" for i in range(n)], transitive_closure(rel))


def random_dominance_poset(
    n: int, rows: int, spread: int = 4, rng: Optional[random.Random] = None
) -> tuple:
    """Coordinatewise order on ``n`` distinct random integer vectors.

    Returns ``(poset, multi_utility)``; small ``spread`` produces ties, so the
    rows are usually not strict monotones.
    """
    rng = rng or random.Random()
    if spread ** rows < n:
        raise BadParams("spread too small for n distinct vectors")
    vecs = set()
    while len(vecs) < n:
        vecs.add(tuple(rng.randrange(spread) for _ in range(rows)))
    vecs = sorted(vecs)
    rng.shuffle(vecs)
    labels = [f"x{i}" for i in range(n)]
    p = _by_comparison(labels, vecs, lambda a, b: all(s <= t for s, t in zip(a, b)))
    mu = MultiUtility(tuple(tuple(v[r] for v in vecs) for r in range(rows)))
    return p, mu
