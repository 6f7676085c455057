"""Finite partial orders stored as dense boolean matrices.

``rel[i, j]`` means ``labels[i] <= labels[j]``.  Everything is label based and
immutable; operations return fresh objects.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .config import SearchConfig, default_config
from .errors import (
    CycleDetected,
    DuplicateLabel,
    EmptyList,
    GroundSetMismatch,
    NotPartialOrder,
    UnknownLabel,
)


# ---------------------------------------------------------------- matrices


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=bool, copy=True)
    a.setflags(write=False)
    return a


def transitive_closure(rel: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure by iterated boolean squaring."""
    r = np.array(rel, dtype=bool) | np.eye(len(rel), dtype=bool)
    while True:
        nxt = r | (r @ r)
        if np.array_equal(nxt, r):
            return r
        r = nxt


def transitive_reduction(rel: np.ndarray) -> np.ndarray:
    """Cover relation of a partial order matrix (strict, no implied edges)."""
    strict = np.array(rel, dtype=bool) & ~np.eye(len(rel), dtype=bool)
    return strict & ~(strict @ strict)


def partial_order_violation(rel: np.ndarray) -> Optional[str]:
    """Return a description of the first violated axiom, or None."""
    rel = np.asarray(rel, dtype=bool)
    n = len(rel)
    if rel.shape != (n, n):
        return "relation matrix is not square"
    if not rel.diagonal().all():
        i = int(np.flatnonzero(~rel.diagonal())[0])
        return f"not reflexive at {i}"
    both = rel & rel.T & ~np.eye(n, dtype=bool)
    if both.any():
        i, j = map(int, np.argwhere(both)[0])
        return f"not antisymmetric at ({i}, {j})"
    gap = (rel @ rel) & ~rel
    if gap.any():
        i, j = map(int, np.argwhere(gap)[0])
        return f"not transitive at ({i}, {j})"
    return None


def is_partial_order(rel: np.ndarray) -> bool:
    return partial_order_violation(rel) is None


def incomparability(rel: np.ndarray) -> np.ndarray:
    return ~rel & ~rel.T


def is_total(rel: np.ndarray) -> bool:
    return bool((rel | rel.T).all())


# ------------------------------------------------------------------- poset


class PairClass(enum.Enum):
    LE = "LE"
    GE = "GE"
    EQ = "EQ"
    INCOMPARABLE = "INCOMPARABLE"


class Poset:
    """A partial order on a finite list of string labels."""

    __slots__ = ("labels", "rel", "_index")

    def __init__(self, labels: Sequence[str], rel, check: bool = True):
        labels = tuple(str(x) for x in labels)
        index = {}
        for i, x in enumerate(labels):
            if x in index:
                raise DuplicateLabel(x)
            index[x] = i
        rel = _frozen(rel)
        if rel.shape != (len(labels), len(labels)):
            raise ValueError("relation shape does not match labels")
        if check:
            why = partial_order_violation(rel)
            if why is not None:
                raise NotPartialOrder(why)
        self.labels = labels
        self.rel = rel
        self._index = index

    # construction helpers
    @classmethod
    def chain(cls, labels: Sequence[str]) -> "Poset":
        n = len(labels)
        return cls(labels, np.triu(np.ones((n, n), dtype=bool)), check=False)

    @classmethod
    def antichain(cls, labels: Sequence[str]) -> "Poset":
        return cls(labels, np.eye(len(labels), dtype=bool), check=False)

    @classmethod
    def from_values(cls, labels: Sequence[str], values: Sequence) -> "Poset":
        """Total order induced by an injective utility (raises if not injective)."""
        v = list(values)
        rel = np.array([[a <= b for b in v] for a in v], dtype=bool).reshape(len(v), len(v))
        return cls(labels, rel)

    @classmethod
    def from_order(cls, labels: Sequence[str], order: Sequence[str]) -> "Poset":
        """Chain on ``labels`` listing elements bottom to top in ``order``."""
        if sorted(order) != sorted(labels):
            raise GroundSetMismatch("order is not a permutation of the labels")
        pos = {x: i for i, x in enumerate(order)}
        return cls.from_values(labels, [pos[x] for x in labels])

    # basic access
    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, x: str) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise UnknownLabel(x) from None

    def le(self, x: str, y: str) -> bool:
        return bool(self.rel[self.index(x), self.index(y)])

    def lt(self, x: str, y: str) -> bool:
        return x != y and self.le(x, y)

    def incomparable(self, x: str, y: str) -> bool:
        return not self.le(x, y) and not self.le(y, x)

    @property
    def strict(self) -> np.ndarray:
        return self.rel & ~np.eye(self.n, dtype=bool)

    @property
    def incomparable_matrix(self) -> np.ndarray:
        return incomparability(self.rel)

    def is_total(self) -> bool:
        return is_total(self.rel)

    def up_set(self, x: str) -> frozenset:
        return frozenset(self.labels[j] for j in np.flatnonzero(self.rel[self.index(x)]))

    def down_set(self, x: str) -> frozenset:
        return frozenset(self.labels[j] for j in np.flatnonzero(self.rel[:, self.index(x)]))

    def is_up_closed(self, subset: Iterable[str]) -> bool:
        mask = self.mask(subset)
        return not (self.rel[mask] & ~mask[None, :]).any()

    def mask(self, subset: Iterable[str]) -> np.ndarray:
        m = np.zeros(self.n, dtype=bool)
        for x in subset:
            m[self.index(x)] = True
        return m

    def restrict(self, subset: Iterable[str]) -> "Poset":
        """Induced subposet, keeping this poset's label order."""
        keep = set(subset)
        for x in keep:
            self.index(x)
        idx = [i for i, x in enumerate(self.labels) if x in keep]
        return Poset([self.labels[i] for i in idx], self.rel[np.ix_(idx, idx)], check=False)

    def with_relation(self, rel) -> "Poset":
        return Poset(self.labels, rel)

    def linear_order(self) -> list:
        """Labels from bottom to top; the poset must be total."""
        if not self.is_total():
            raise NotPartialOrder("linear_order requires a total order")
        below = self.rel.sum(axis=0)
        return [self.labels[i] for i in np.argsort(below, kind="stable")]

    def covers(self) -> list:
        red = transitive_reduction(self.rel)
        return [(self.labels[i], self.labels[j]) for i, j in zip(*np.nonzero(red))]

    def strict_pairs(self) -> list:
        return [(self.labels[i], self.labels[j]) for i, j in zip(*np.nonzero(self.strict))]

    # equality / hashing
    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.rel, other.rel)

    def __hash__(self) -> int:
        return hash((self.labels, self.rel.tobytes()))

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, covers={self.covers()!r})"

    # JSON
    def to_json(self) -> dict:
        return {"labels": list(self.labels), "cover": [list(c) for c in self.covers()]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    @classmethod
    def from_json(cls, obj: dict) -> "Poset":
        return from_cover_relations(obj["labels"], [tuple(c) for c in obj.get("cover", [])])


def from_cover_relations(labels: Sequence[str], covers: Iterable[tuple]) -> Poset:
    """Build the reflexive-transitive closure of a list of cover pairs."""
    labels = [str(x) for x in labels]
    index = {}
    for i, x in enumerate(labels):
        if x in index:
            raise DuplicateLabel(x)
        index[x] = i
    n = len(labels)
    rel = np.eye(n, dtype=bool)
    for a, b in covers:
        if a not in index:
            raise UnknownLabel(a)
        if b not in index:
            raise UnknownLabel(b)
        rel[index[a], index[b]] = True
    rel = transitive_closure(rel)
    both = rel & rel.T & ~np.eye(n, dtype=bool)
    if both.any():
        i, j = np.argwhere(both)[0]
        raise CycleDetected(f"{labels[i]} and {labels[j]} lie on a cycle")
    return Poset(labels, rel, check=False)


def classify_pair(p: Poset, x: str, y: str) -> PairClass:
    i, j = p.index(x), p.index(y)
    if i == j:
        return PairClass.EQ
    if p.rel[i, j]:
        return PairClass.LE
    if p.rel[j, i]:
        return PairClass.GE
    return PairClass.INCOMPARABLE


def _same_ground(a: Poset, b: Poset) -> None:
    if a.labels != b.labels:
        raise GroundSetMismatch(f"{a.labels!r} != {b.labels!r}")


def is_extension(base: Poset, cand: Poset, require_linear: bool = False) -> bool:
    _same_ground(base, cand)
    if (base.rel & ~cand.rel).any():
        return False
    return cand.is_total() if require_linear else True


def intersect(rels: Sequence[Poset]) -> Poset:
    rels = list(rels)
    if not rels:
        raise EmptyList("intersect needs at least one poset")
    out = rels[0].rel.copy()
    for q in rels[1:]:
        _same_ground(rels[0], q)
        out &= q.rel
    return Poset(rels[0].labels, out, check=False)


# ------------------------------------------------------------- isomorphism


def _signature(p: Poset) -> list:
    s = p.strict
    return list(zip(s.sum(axis=0).tolist(), s.sum(axis=1).tolist()))


def is_order_isomorphic(p: Poset, q: Poset) -> Optional[dict]:
    """Label bijection f with x <= y iff f(x) <= f(y), or None.

    Backtracking over candidates with equal (down-degree, up-degree); feasible
    up to a dozen or so elements.
    """
    if p.n != q.n or int(p.rel.sum()) != int(q.rel.sum()):
        return None
    sp, sq = _signature(p), _signature(q)
    if sorted(sp) != sorted(sq):
        return None
    n = p.n
    # most constrained first: rare signatures, then many relations
    freq = {}
    for s in sp:
        freq[s] = freq.get(s, 0) + 1
    order = sorted(range(n), key=lambda i: (freq[sp[i]], -sum(sp[i]), i))
    cands = [[j for j in range(n) if sq[j] == sp[i]] for i in range(n)]
    P, Q = p.rel, q.rel
    image = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        i = order[k]
        for j in cands[i]:
            if used[j]:
                continue
            ok = True
            for m in order[:k]:
                jm = image[m]
                if P[i, m] != Q[j, jm] or P[m, i] != Q[jm, j]:
                    ok = False
                    break
            if ok:
                image[i] = j
                used[j] = True
                if extend(k + 1):
                    return True
                used[j] = False
                image[i] = -1
        return False

    if not extend(0):
        return None
    return {p.labels[i]: q.labels[image[i]] for i in range(n)}


# ---------------------------------------------------------- dense subsets


@dataclass(frozen=True)
class DenseSubset:
    labels: tuple
    exact: bool

    def __len__(self) -> int:
        return len(self.labels)

    def as_set(self) -> frozenset:
        return frozenset(self.labels)


def dense_requirements(p: Poset, mode: str) -> list:
    """One bitmask of admissible witnesses per pair that needs one."""
    rel, n = p.rel, p.n
    reqs = []
    if mode == "debreu":
        for i, j in zip(*np.nonzero(p.strict)):
            ok = rel[i, :] & rel[:, j]
            reqs.append(sum(1 << int(d) for d in np.flatnonzero(ok)))
    elif mode == "upper":
        inc = p.incomparable_matrix
        for i, j in zip(*np.nonzero(inc)):
            ok = inc[i, :] & rel[:, j]
            reqs.append(sum(1 << int(d) for d in np.flatnonzero(ok)))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return reqs


def is_dense_subset(p: Poset, subset: Iterable[str], mode: str) -> bool:
    m = sum(1 << p.index(x) for x in subset)
    return all(r & m for r in dense_requirements(p, mode))


def minimum_dense_subset(
    p: Poset, mode: str = "debreu", config: Optional[SearchConfig] = None
) -> DenseSubset:
    """Smallest Debreu dense (``mode="debreu"``) or Debreu upper dense
    (``mode="upper"``) subset.

    Exact below ``config.dense_subset_cap`` elements, ties broken by the
    lexicographically least sorted label tuple; greedy set cover above it.
    """
    config = config or default_config()
    reqs = sorted(set(dense_requirements(p, mode)))
    # a requirement implied by a smaller one is redundant
    reqs = [r for r in reqs if not any(s != r and s & r == s for s in reqs)]
    if not reqs:
        return DenseSubset((), True)
    by_label = sorted(range(p.n), key=lambda i: p.labels[i])
    if p.n <= config.dense_subset_cap:
        for size in range(1, p.n + 1):
            for combo in itertools.combinations(by_label, size):
                m = 0
                for i in combo:
                    m |= 1 << i
                if all(r & m for r in reqs):
                    return DenseSubset(tuple(p.labels[i] for i in combo), True)
    chosen, left = [], list(reqs)
    while left:
        best = max(by_label, key=lambda i: sum(1 for r in left if r >> i & 1))
        chosen.append(best)
        left = [r for r in left if not r >> best & 1]
    return DenseSubset(tuple(sorted(p.labels[i] for i in chosen)), False)
