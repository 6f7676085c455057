"""Real-valued representations: monotones, multi-utilities, increasing-set
families and realizers.

All values are ``fractions.Fraction``; there is no tolerance anywhere here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    BadRadix,
    DimensionMismatch,
    GroundSetMismatch,
    InsufficientSeparation,
    NotIncreasing,
    NotInjectiveMultiUtility,
    NotMultiUtility,
    NotRealizer,
    TupleCollision,
)
from .extension import (
    debreu_extension_from_sets,
    extension_from_monotone,
    lex_extension,
)
from .poset import Poset, intersect, is_extension

KINDS = ("none", "plain", "strict", "injective")
DEFAULT_RADIX = Fraction(1, 4)


@dataclass(frozen=True)
class MultiUtility:
    """Value table: ``rows[i][j]`` is function ``i`` at element ``j``."""

    rows: tuple
    kind: str = "plain"

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in r) for r in self.rows)
        if len({len(r) for r in rows}) > 1:
            raise DimensionMismatch("rows have different lengths")
        if self.kind not in KINDS[1:]:
            raise ValueError(f"unknown kind {self.kind!r}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_functions(cls, p: Poset, funcs: Sequence, kind: str = "plain") -> "MultiUtility":
        return cls(tuple(tuple(f(x) for x in p.labels) for f in funcs), kind)

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def width(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def value(self, p: Poset, i: int, x: str) -> Fraction:
        return self.rows[i][p.index(x)]

    def with_kind(self, kind: str) -> "MultiUtility":
        return MultiUtility(self.rows, kind)

    def to_json(self) -> dict:
        return {
            "rows": [[[v.numerator, v.denominator] for v in r] for r in self.rows],
            "kind": self.kind,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "MultiUtility":
        rows = tuple(tuple(Fraction(a, b) for a, b in r) for r in obj["rows"])
        return cls(rows, obj.get("kind", "plain"))


@dataclass(frozen=True)
class IncreasingSetFamily:
    """Ordered list of up-closed subsets of ``base``."""

    base: Poset
    sets: tuple
    validate: bool = field(default=True, compare=False)

    def __post_init__(self):
        sets = tuple(frozenset(s) for s in self.sets)
        object.__setattr__(self, "sets", sets)
        if self.validate:
            self.check(self.base)

    def check(self, p: Poset) -> None:
        if p.labels != self.base.labels:
            raise GroundSetMismatch("family belongs to another ground set")
        for k, s in enumerate(self.sets):
            if not p.is_up_closed(s):
                raise NotIncreasing(k)

    def masks(self) -> list:
        return [self.base.mask(s) for s in self.sets]

    def __len__(self) -> int:
        return len(self.sets)

    def swapped(self, m: int) -> "IncreasingSetFamily":
        """Same family with members 0 and ``m`` exchanged."""
        sets = list(self.sets)
        sets[0], sets[m] = sets[m], sets[0]
        return IncreasingSetFamily(self.base, tuple(sets), validate=False)

    def to_json(self) -> dict:
        labels = self.base.labels
        return {"sets": [[x for x in labels if x in s] for s in self.sets]}

    @classmethod
    def from_json(cls, p: Poset, obj: dict) -> "IncreasingSetFamily":
        return cls(p, tuple(frozenset(s) for s in obj["sets"]))


@dataclass(frozen=True)
class Realizer:
    """Linear extensions of ``base`` whose intersection is ``base``."""

    base: Poset
    members: tuple

    def __post_init__(self):
        members = tuple(self.members)
        object.__setattr__(self, "members", members)
        if not members:
            raise NotRealizer("a realizer needs at least one member")
        for k, q in enumerate(members):
            if q.labels != self.base.labels:
                raise NotRealizer(f"member {k} has a different ground set")
            if not is_extension(self.base, q, require_linear=True):
                raise NotRealizer(f"member {k} is not a linear extension")
        if intersect(members) != self.base:
            raise NotRealizer("members do not intersect to the base order")

    def __len__(self) -> int:
        return len(self.members)

    def to_json(self) -> list:
        return [q.linear_order() for q in self.members]

    @classmethod
    def from_json(cls, p: Poset, obj: list) -> "Realizer":
        return cls(p, tuple(Poset.from_order(p.labels, order) for order in obj))


# ---------------------------------------------------------------- checks


@dataclass(frozen=True)
class KindReport:
    """Strongest kind a table satisfies plus a witness for each failed kind.

    Counterexamples are ``(row, x, y)``; ``row`` is None for the plain test,
    where ``(x, y)`` is a pair whose order the table gets wrong.
    """

    kind: str
    counterexamples: dict

    def at_least(self, kind: str) -> bool:
        return KINDS.index(self.kind) >= KINDS.index(kind)


def _table(p: Poset, mu: MultiUtility) -> np.ndarray:
    if mu.m == 0:
        return np.zeros((0, p.n), dtype=object)
    if mu.width != p.n:
        raise DimensionMismatch(f"table has {mu.width} columns for {p.n} elements")
    return np.array(mu.rows, dtype=object)


def row_order(row) -> np.ndarray:
    v = np.array(list(row), dtype=object)
    return (v[:, None] <= v[None, :]).astype(bool)


def validate_representation(p: Poset, mu: MultiUtility) -> KindReport:
    t = _table(p, mu)
    cx = {}
    induced = np.ones((p.n, p.n), dtype=bool)
    for r in t:
        induced &= row_order(r)
    if not np.array_equal(induced, p.rel):
        i, j = np.argwhere(induced != p.rel)[0]
        cx["plain"] = (None, p.labels[i], p.labels[j])
        return KindReport("none", cx)
    s = p.strict
    for k, r in enumerate(t):
        ties = s & ~(np.array(r)[:, None] < np.array(r)[None, :]).astype(bool)
        if ties.any():
            i, j = np.argwhere(ties)[0]
            cx["strict"] = (k, p.labels[i], p.labels[j])
            break
    for k, r in enumerate(t):
        eq = (np.array(r)[:, None] == np.array(r)[None, :]).astype(bool) & ~np.eye(p.n, dtype=bool)
        if eq.any():
            i, j = np.argwhere(eq)[0]
            cx["injective"] = (k, p.labels[i], p.labels[j])
            break
    if "strict" in cx:
        cx.setdefault("injective", cx["strict"])
        return KindReport("plain", cx)
    if "injective" in cx:
        return KindReport("strict", cx)
    return KindReport("injective", cx)


def require_plain(p: Poset, mu: MultiUtility) -> KindReport:
    rep = validate_representation(p, mu)
    if rep.kind == "none":
        _, x, y = rep.counterexamples["plain"]
        raise NotMultiUtility(f"table misrepresents the pair ({x}, {y})")
    return rep


# --------------------------------------------------------- constructions


def increasing_family_from_multi_utility(p: Poset, mu: MultiUtility) -> IncreasingSetFamily:
    """Upper preimages ``u_i^{-1}([v, inf))`` for every row and attained value,
    row-major, ascending in ``v``."""
    require_plain(p, mu)
    sets = []
    for r in mu.rows:
        for v in sorted(set(r)):
            sets.append(frozenset(x for x, w in zip(p.labels, r) if w >= v))
    return IncreasingSetFamily(p, tuple(sets), validate=False)


def injective_monotone_from_family(fam: IncreasingSetFamily, r=DEFAULT_RADIX) -> tuple:
    """Weighted membership sum ``sum_n r**n [x in A_{n+1}]`` with ``0 < r < 1/2``.

    Comparing two values is the same as comparing membership in the first set
    that tells them apart.
    """
    r = Fraction(r)
    if not 0 < r < Fraction(1, 2):
        raise BadRadix(f"radix {r} outside (0, 1/2)")
    labels = fam.base.labels
    vecs = {}
    for x in labels:
        key = tuple(x in s for s in fam.sets)
        if key in vecs:
            raise InsufficientSeparation(f"{vecs[key]} and {x} lie in exactly the same sets", (vecs[key], x))
        vecs[key] = x
    out = []
    for x in labels:
        total, w = Fraction(0), Fraction(1)
        for s in fam.sets:
            if x in s:
                total += w
            w *= r
        out.append(total)
    return tuple(out)


def first_difference_less(fam: IncreasingSetFamily, x: str, y: str) -> bool:
    """True iff the first set containing exactly one of x, y contains y."""
    for s in fam.sets:
        if (x in s) != (y in s):
            return y in s
    return False


def injective_multi_utility_from_multi_utility(
    p: Poset, mu: MultiUtility, r=DEFAULT_RADIX
) -> MultiUtility:
    """One injective monotone per family member, each built from the family
    with that member moved to the front."""
    fam = increasing_family_from_multi_utility(p, mu)
    rows = tuple(injective_monotone_from_family(fam.swapped(m), r) for m in range(len(fam)))
    return MultiUtility(rows, "injective")


def realizer_from_multi_utility(p: Poset, mu: MultiUtility) -> Realizer:
    """One linear extension per row, sharing the upper-preimage family."""
    fam = increasing_family_from_multi_utility(p, mu)
    members = tuple(extension_from_monotone(p, row, fam).limit for row in mu.rows)
    return Realizer(p, members)


def rank_row(q: Poset) -> tuple:
    """Utility of a total order: number of elements strictly below."""
    return tuple(Fraction(int(c) - 1) for c in q.rel.sum(axis=0))


def realizer_to_injective_multi_utility(r: Realizer) -> MultiUtility:
    return MultiUtility(tuple(rank_row(q) for q in r.members), "injective")


def injective_multi_utility_to_realizer(p: Poset, mu: MultiUtility) -> Realizer:
    rep = validate_representation(p, mu)
    if rep.kind != "injective":
        raise NotInjectiveMultiUtility(f"table validates only as {rep.kind!r}")
    return Realizer(p, tuple(Poset(p.labels, row_order(row), check=False) for row in mu.rows))


def _reference_extension(p: Poset, mu: MultiUtility) -> Poset:
    try:
        return lex_extension(p, mu)
    except TupleCollision:
        fam = increasing_family_from_multi_utility(p, mu)
        return debreu_extension_from_sets(p, fam).limit


def strictify_multi_utility(p: Poset, mu: MultiUtility, eps=Fraction(1)) -> MultiUtility:
    """Add ``eps * rank`` of a fixed linear extension to every row.

    ``eps`` is shrunk per row below (smallest positive gap) / n so every strict
    inequality of the original row survives; comparable ties become strict.
    """
    require_plain(p, mu)
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    w = rank_row(_reference_extension(p, mu))
    rows = []
    for row in mu.rows:
        vals = sorted(set(row))
        gaps = [b - a for a, b in zip(vals, vals[1:])]
        e = eps
        if gaps:
            e = min(e, min(gaps) / p.n)
        rows.append(tuple(v + e * wv for v, wv in zip(row, w)))
    out = MultiUtility(tuple(rows), "plain")
    return out.with_kind(validate_representation(p, out).kind)


def kind_of(p: Poset, mu: MultiUtility) -> str:
    return validate_representation(p, mu).kind
