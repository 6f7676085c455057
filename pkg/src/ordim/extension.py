"""Linear extensions built as limits of increasing sequences of partial orders.

Four procedures are provided, each returning the full step trace:

* ``debreu_extension_from_dense``: witnesses are elements ``d``; the step for
  ``d`` puts ``x`` below ``y`` whenever ``x`` and ``y`` are still incomparable,
  ``x`` is incomparable to ``d`` in the base order and ``d <= y`` there.
* ``debreu_extension_from_sets``: witnesses are up-closed sets ``A``; the step
  puts ``x`` below ``y`` whenever they are still incomparable, ``x`` is outside
  ``A`` and ``y`` inside.
* ``extension_from_monotone``: same set steps, started from the base order
  augmented by every incomparable pair a monotone strictly orders.
* ``lex_extension`` and ``antichain_extension``: direct constructions.

A finite witness list reaches its fixpoint in one pass, so each procedure runs
exactly one pass and then checks totality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence, Union

import numpy as np

from .errors import (
    BadBase,
    BadFirstWitness,
    DecompositionOverlap,
    EmptySequence,
    GroundSetMismatch,
    IllegalSimplification,
    InsufficientSeparation,
    NotAntichain,
    NotMonotone,
    NotTotalOnA,
    NotUpperDense,
    TupleCollision,
)
from .poset import Poset, incomparability, partial_order_violation


@dataclass(frozen=True)
class RelationSequence:
    ground: tuple
    steps: tuple  # of read-only n x n bool arrays, step 0 first

    def __post_init__(self):
        n = len(self.ground)
        for s in self.steps:
            if s.shape != (n, n):
                raise GroundSetMismatch("step shape does not match ground set")

    def __len__(self) -> int:
        return len(self.steps)

    def is_monotone(self) -> bool:
        return all(not (a & ~b).any() for a, b in zip(self.steps, self.steps[1:]))


class RawRelation(NamedTuple):
    """A limit that failed the partial-order axioms."""

    matrix: np.ndarray
    diagnostic: str


def limit_of_sequence(s: RelationSequence) -> Union[Poset, RawRelation]:
    """Set-theoretic lim inf of a finite sequence of relations.

    A pair belongs to the limit iff it is present in every step after its
    last absence, which for a stored finite sequence means it is present in
    the final step.
    """
    if not s.steps:
        raise EmptySequence("sequence has no steps")
    stack = np.stack(s.steps)
    absent = ~stack
    # index of last absence per pair, -1 if never absent
    last_absent = np.where(absent.any(axis=0), len(stack) - 1 - np.argmax(absent[::-1], axis=0), -1)
    lim = last_absent < len(stack) - 1
    why = partial_order_violation(lim)
    if why is not None:
        return RawRelation(lim, why)
    return Poset(s.ground, lim, check=False)


@dataclass(frozen=True)
class ExtensionTrace:
    base: Poset
    sequence: RelationSequence
    witnesses: tuple  # per step: None for step 0, else label or frozenset of labels
    limit: Poset
    method: str = field(default="")

    def step(self, k: int) -> Poset:
        return Poset(self.sequence.ground, self.sequence.steps[k], check=False)

    def added_pairs(self, k: int) -> list:
        labels = self.sequence.ground
        cur = self.sequence.steps[k]
        prev = self.sequence.steps[k - 1] if k else self.base.rel
        new = cur & ~prev
        return [[labels[i], labels[j]] for i, j in zip(*np.nonzero(new))]

    def effective_steps(self) -> int:
        return sum(1 for k in range(1, len(self.sequence)) if self.added_pairs(k))

    def to_json(self) -> list:
        out = []
        for k, w in enumerate(self.witnesses):
            if isinstance(w, frozenset):
                w = [x for x in self.sequence.ground if x in w]
            out.append({"index": k, "witness": w, "added_pairs": self.added_pairs(k)})
        return out


def _finish(p: Poset, steps: list, witnesses: list, method: str) -> ExtensionTrace:
    seq = RelationSequence(p.labels, tuple(_ro(s) for s in steps))
    lim = limit_of_sequence(seq)
    if isinstance(lim, RawRelation):  # cannot happen for monotone partial-order steps
        raise InsufficientSeparation(f"limit is not a partial order: {lim.diagnostic}")
    return ExtensionTrace(p, seq, tuple(witnesses), lim, method)


def _ro(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=bool, copy=True)
    a.setflags(write=False)
    return a


def _unresolved(p: Poset, rel: np.ndarray) -> Optional[tuple]:
    inc = incomparability(rel)
    if inc.any():
        i, j = np.argwhere(inc)[0]
        return p.labels[i], p.labels[j]
    return None


# ------------------------------------------------------ element witnesses


def debreu_extension_from_dense(
    p: Poset, d_seq: Sequence[str], target: Optional[tuple] = None
) -> ExtensionTrace:
    """Linear extension from an enumeration of witnesses.

    With ``target=(x, y)`` the first witness ``d`` in ``d_seq`` satisfying
    ``x || d <= y`` is moved to the front, so ``x`` ends strictly below ``y``.
    Any enumeration of the whole ground set resolves every incomparable pair.
    """
    idx = [p.index(d) for d in d_seq]
    le0 = p.rel
    inc0 = p.incomparable_matrix
    if target is not None:
        x, y = (p.index(t) for t in target)
        if not inc0[x, y]:
            raise BadFirstWitness(f"target {target!r} is not an incomparable pair")
        good = [k for k, d in enumerate(idx) if inc0[x, d] and le0[d, y]]
        if not good:
            raise BadFirstWitness(f"no witness d with {target[0]} || d <= {target[1]}")
        k = good[0]
        idx = [idx[k]] + idx[:k] + idx[k + 1:]

    steps = [le0.copy()]
    for d in idx:
        prev = steps[-1]
        fire = incomparability(prev) & inc0[:, d][:, None] & le0[d, :][None, :]
        steps.append(prev | fire)
    left = _unresolved(p, steps[-1])
    if left is not None:
        raise NotUpperDense(f"pair {left!r} is never resolved by the witness list")
    return _finish(p, steps, [None] + [p.labels[d] for d in idx], "dense")


# ---------------------------------------------------------- set witnesses


def _set_steps(start: np.ndarray, masks: Sequence[np.ndarray], simplified: bool) -> list:
    steps = [start.copy()]
    for m in masks:
        prev = steps[-1]
        fire = ~m[:, None] & m[None, :]
        if not simplified:
            fire &= incomparability(prev)
        steps.append(prev | fire)
    return steps


def separated_both_ways(fam) -> Optional[tuple]:
    """A pair some members separate in opposite directions, if any."""
    masks = fam.masks()
    n = fam.base.n
    fwd = np.zeros((n, n), dtype=bool)
    for m in masks:
        fwd |= ~m[:, None] & m[None, :]
    both = fwd & fwd.T
    if both.any():
        i, j = np.argwhere(both)[0]
        return fam.base.labels[i], fam.base.labels[j]
    return None


def debreu_extension_from_sets(
    p: Poset, fam, base: Optional[Poset] = None, simplified: bool = False
) -> ExtensionTrace:
    """Linear extension from an ordered family of up-closed sets.

    ``base`` replaces the starting relation by any partial order contained in
    ``p`` (e.g. the trivial order).  ``simplified`` drops the incomparability
    test, which is only sound when no pair is separated in both directions
    (families coming from a single injective monotone).
    """
    fam.check(p)
    if base is None:
        start = p.rel
    else:
        if base.labels != p.labels:
            raise GroundSetMismatch("custom base has a different ground set")
        if (base.rel & ~p.rel).any():
            raise BadBase("custom base is not contained in the partial order")
        start = base.rel
    if simplified:
        bad = separated_both_ways(fam)
        if bad is not None:
            raise IllegalSimplification(f"pair {bad!r} is separated in both directions")
    steps = _set_steps(start, fam.masks(), simplified)
    last = steps[-1]
    left = _unresolved(p, last)
    if left is not None:
        raise InsufficientSeparation(f"pair {left!r} is never separated", left)
    if (p.rel & ~last).any():
        i, j = np.argwhere(p.rel & ~last)[0]
        pair = (p.labels[i], p.labels[j])
        raise InsufficientSeparation(f"limit loses {pair!r} of the base order", pair)
    return _finish(p, steps, [None] + list(fam.sets), "sets")


def _row(p: Poset, u) -> np.ndarray:
    u = [Fraction(v) for v in u]
    if len(u) != p.n:
        raise GroundSetMismatch("monotone has the wrong length")
    return np.array(u, dtype=object)


def monotone_violation(p: Poset, u) -> Optional[tuple]:
    v = _row(p, u)
    bad = p.rel & (v[:, None] > v[None, :]).astype(bool)
    if bad.any():
        i, j = np.argwhere(bad)[0]
        return p.labels[i], p.labels[j]
    return None


def extension_from_monotone(p: Poset, u, fam) -> ExtensionTrace:
    """Linear extension in which every incomparable pair with ``u(x) < u(y)``
    ends with ``x`` strictly below ``y``."""
    bad = monotone_violation(p, u)
    if bad is not None:
        raise NotMonotone(f"{bad[0]} <= {bad[1]} but u decreases")
    fam.check(p)
    v = _row(p, u)
    less = (v[:, None] < v[None, :]).astype(bool)
    start = p.rel | (p.incomparable_matrix & less)
    steps = _set_steps(start, fam.masks(), simplified=False)
    left = _unresolved(p, steps[-1])
    if left is not None:
        raise InsufficientSeparation(f"pair {left!r} is never separated", left)
    return _finish(p, steps, [None] + list(fam.sets), "monotone")


# ---------------------------------------------------------- direct builds


def lex_extension(p: Poset, mu) -> Poset:
    """Order elements lexicographically by their value tuples."""
    from .representations import require_plain

    tuples = [tuple(row[i] for row in mu.rows) for i in range(p.n)]
    seen = {}
    for i, t in enumerate(tuples):
        if t in seen:
            raise TupleCollision(f"{p.labels[seen[t]]} and {p.labels[i]} share the tuple {t}")
        seen[t] = i
    require_plain(p, mu)
    rel = np.array([[a <= b for b in tuples] for a in tuples], dtype=bool)
    return Poset(p.labels, rel, check=False)


def canonical_linear_extension(p: Poset) -> list:
    """Topological order taking the least available label first."""
    rel = p.strict
    indeg = rel.sum(axis=0).tolist()
    done, order = [False] * p.n, []
    for _ in range(p.n):
        i = min((k for k in range(p.n) if not done[k] and indeg[k] == 0), key=lambda k: p.labels[k])
        done[i] = True
        order.append(p.labels[i])
        for j in np.flatnonzero(rel[i]):
            indeg[j] -= 1
    return order


def _band(block: Poset, lo: int) -> dict:
    order = canonical_linear_extension(block)
    c = len(order)
    return {x: lo + Fraction(r + 1, c + 1) for r, x in enumerate(order)}


def antichain_extension(p: Poset, a: Iterable[str], order_on_a: Poset) -> Poset:
    """Total order extending ``p`` and a total order on an antichain ``a``.

    Elements below some member of ``a`` get values in (-1, 0), elements
    incomparable to all of ``a`` in (0, 1), ``a`` itself in (1, 2) and elements
    above ``a`` in (2, 3); each band is ranked by a linear extension.
    """
    A = set(a)
    ma = p.mask(A)
    if (p.strict & ma[:, None] & ma[None, :]).any():
        raise NotAntichain("the given subset contains a comparable pair")
    if set(order_on_a.labels) != A:
        raise GroundSetMismatch("order_on_a is not over the antichain")
    if not order_on_a.is_total():
        raise NotTotalOnA("order on the antichain is not total")
    s = p.strict
    Y = {p.labels[i] for i in np.flatnonzero((s[:, ma]).any(axis=1))}
    Z = {p.labels[i] for i in np.flatnonzero((s[ma, :]).any(axis=0))}
    if A & Y or A & Z or Y & Z:
        raise DecompositionOverlap("blocks Y, A, Z are not disjoint")
    B = set(p.labels) - A - Y - Z
    u = {}
    u.update(_band(p.restrict(Y), -1))
    u.update(_band(p.restrict(B), 0))
    u.update(_band(order_on_a, 1))
    u.update(_band(p.restrict(Z), 2))
    return Poset.from_values(p.labels, [u[x] for x in p.labels])
