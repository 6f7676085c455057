"""Acceptance criteria, one check per criterion.

Run under pytest (the summary lines appear at the end of the session) or
directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import contextlib
import io
import json
import random
import sys
import tempfile
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from ordim import cli  # noqa: E402
from ordim.dimension import KINDS, dimension  # noqa: E402
from ordim.extension import (  # noqa: E402
    antichain_extension,
    debreu_extension_from_dense,
    debreu_extension_from_sets,
)
from ordim.generators import (  # noqa: E402
    embed_standard_example_in_majorization,
    majorization_grid,
    prop2_extension,
    random_dominance_poset,
    random_poset,
    standard_example,
    theorem12_grid,
)
from ordim.poset import Poset, intersect, is_extension, minimum_dense_subset, partial_order_violation  # noqa: E402
from ordim.representations import (  # noqa: E402
    increasing_family_from_multi_utility,
    injective_monotone_from_family,
    injective_multi_utility_from_multi_utility,
    injective_multi_utility_to_realizer,
    realizer_from_multi_utility,
    realizer_to_injective_multi_utility,
    strictify_multi_utility,
    validate_representation,
)

SEED = 20260415
RESULTS: dict = {}


def random_corpus(count=200, max_n=12, seed=SEED):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        p = random_poset(n, rng.uniform(0.05, 0.6), rng)
        d = list(p.labels)
        rng.shuffle(d)
        out.append((p, d))
    return out


def dominance_corpus(count=200, max_n=12, seed=SEED + 1):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        m = rng.randint(2, 4)
        n = rng.randint(1, max_n)
        out.append(random_dominance_poset(n, m, spread=4, rng=rng))
    return out


def _steps_ok(t, p):
    prev = p.rel
    for rel in t.sequence.steps:
        if partial_order_violation(rel) is not None or (prev & ~rel).any():
            return False
        prev = rel
    return is_extension(p, t.limit, require_linear=True)


# ----------------------------------------------------------------- checks


def c1_dense_steps():
    start = time.perf_counter()
    bad = sum(not _steps_ok(debreu_extension_from_dense(p, d), p) for p, d in random_corpus())
    secs = time.perf_counter() - start
    return bad == 0 and secs < 30, f"200 posets, {bad} failures, {secs:.2f}s (limit 30s)"


def c2_set_steps():
    bad = 0
    for p, mu in dominance_corpus():
        fam = increasing_family_from_multi_utility(p, mu)
        t = debreu_extension_from_sets(p, fam)
        u = injective_monotone_from_family(fam, Fraction(1, 4))
        ok = _steps_ok(t, p) and all(
            t.limit.le(x, y) == (u[i] <= u[j]) for i, x in enumerate(p.labels) for j, y in enumerate(p.labels)
        )
        bad += not ok
    return bad == 0, f"200 posets with 2-4 row tables, {bad} failures"


def c3_figure_reproduction():
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        base = tmp / "f.json"
        fam = tmp / "fam.json"
        fam.write_text(json.dumps({"sets": [["D", "E", "F"], ["A", "C", "F"], ["E"]]}))
        with contextlib.redirect_stdout(io.StringIO()) as buf:
            codes = [
                cli.main(["generate", "--family", "figure1", "--out", str(base)]),
                cli.main(["extend", "--in", str(base), "--method", "dense", "--d-list", "D,A,E",
                          "--dot-dir", str(tmp / "dense"), "--out", str(tmp / "dense.json")]),
                cli.main(["extend", "--in", str(base), "--method", "sets", "--family", str(fam),
                          "--dot-dir", str(tmp / "sets"), "--out", str(tmp / "sets.json")]),
            ]
        del buf
        o1 = json.loads((tmp / "dense.json").read_text())["order"]
        o2 = json.loads((tmp / "sets.json").read_text())["order"]
        last = lambda d: sorted(d.glob("panel_*.dot"), key=lambda f: int(f.stem.split("_")[1]))[-1]
        same = last(tmp / "dense").read_bytes() == last(tmp / "sets").read_bytes()
    ok = codes == [0, 0, 0] and o1 == o2 == list("BACDEF") and same
    return ok, f"orders {''.join(o1)} / {''.join(o2)}, final DOT identical: {same}"


def c4_alternating_growth():
    sizes, adjacency = [], True
    for k in range(2, 7):
        ext = prop2_extension(k)
        for x in range(1, k + 1):
            lo, hi = str(-x), str(x)
            adjacency &= ext.lt(lo, hi) and not any(ext.lt(lo, z) and ext.lt(z, hi) for z in ext.labels)
        d = minimum_dense_subset(ext, "debreu")
        sizes.append(len(d) if d.exact else -1)
    return adjacency and sizes == list(range(2, 7)), f"adjacency {adjacency}, sizes {sizes}"


def c5_realizers():
    bad = 0
    for p, mu in dominance_corpus(100, 10, SEED + 5):
        r = realizer_from_multi_utility(p, mu)
        bad += not (len(r) == mu.m and intersect(r.members) == p)
    return bad == 0, f"100 posets, {bad} failures"


def _row_order(p, row):
    return [[row[i] <= row[j] for j in range(p.n)] for i in range(p.n)]


def c6_round_trips():
    bad = 0
    for p, mu in dominance_corpus(100, 10, SEED + 5):
        r = realizer_from_multi_utility(p, mu)
        back = injective_multi_utility_to_realizer(p, realizer_to_injective_multi_utility(r))
        ok = all((a.rel == b.rel).all() for a, b in zip(r.members, back.members))
        imu = injective_multi_utility_from_multi_utility(p, mu)
        again = realizer_to_injective_multi_utility(injective_multi_utility_to_realizer(p, imu))
        ok &= all(_row_order(p, a) == _row_order(p, b) for a, b in zip(imu.rows, again.rows))
        bad += not ok
    return bad == 0, f"100 posets, {bad} failures"


def c7_dimension_witnesses():
    cases = [
        ("chain(5)", Poset.chain(list("abcde")), 1),
        ("antichain(3)", Poset.antichain(list("abc")), 2),
        ("standard_example(3)", standard_example(3), 3),
        ("theorem12_grid(3)", theorem12_grid(3)[0], 2),
        ("majorization_grid(3,6)", majorization_grid(3, 6)[0], 2),
        ("embedded standard example, 4 outcomes", embed_standard_example_in_majorization(4).poset, 3),
    ]
    start = time.perf_counter()
    got = []
    ok = True
    for name, p, want in cases:
        cert = dimension(p)
        got.append(f"{name}={cert.value}")
        ok &= cert.value == want and cert.exact and intersect(cert.witness.members) == p
    secs = time.perf_counter() - start
    return ok and secs < 60, ", ".join(got) + f"; {secs:.2f}s (limit 60s)"


def c8_tri_equality():
    corpus = [p for p, _ in random_corpus()] + [p for p, _ in dominance_corpus(100, 10, SEED + 5)]
    bad = sum(len({dimension(p, k).value for k in KINDS}) != 1 for p in corpus)
    return bad == 0, f"{len(corpus)} posets, {bad} disagreements"


def c9_strictify():
    cases = [theorem12_grid(4)] + dominance_corpus() + dominance_corpus(100, 10, SEED + 5)
    bad = 0
    for p, mu in cases:
        out = strictify_multi_utility(p, mu)
        bad += not (out.m == mu.m and validate_representation(p, out).at_least("strict"))
    return bad == 0, f"{len(cases)} tables, {bad} failures"


def c10_antichain_extension():
    rng = random.Random(SEED + 10)
    bad = 0
    for _ in range(100):
        p = random_poset(rng.randint(1, 12), rng.uniform(0.05, 0.6), rng)
        labels = list(p.labels)
        rng.shuffle(labels)
        a = []
        for x in labels:
            if all(p.incomparable(x, y) for y in a):
                a.append(x)
        a = a[: rng.randint(0, len(a))]
        order = list(a)
        rng.shuffle(order)
        oa = Poset.from_order(sorted(a), order)
        q = antichain_extension(p, set(a), oa)
        ok = q.is_total() and is_extension(p, q) and all(q.le(x, y) for x in a for y in a if oa.le(x, y))
        bad += not ok
    return bad == 0, f"100 triples, {bad} failures"


CRITERIA = [
    (1, "witness-list steps are orders; limit linear", c1_dense_steps),
    (2, "set-family steps; weighted-membership utility", c2_set_steps),
    (3, "dense and set runs agree on the 6-element example", c3_figure_reproduction),
    (4, "alternating chain adjacency and dense-subset growth", c4_alternating_growth),
    (5, "realizer from multi-utility", c5_realizers),
    (6, "realizer / injective multi-utility round trips", c6_round_trips),
    (7, "dimension witnesses", c7_dimension_witnesses),
    (8, "three dimension notions agree", c8_tri_equality),
    (9, "strictification", c9_strictify),
    (10, "antichain extension triples", c10_antichain_extension),
]


def summary_lines():
    return [
        f"[{'PASS' if RESULTS[i][0] else 'FAIL'}] criterion {i:>2}: {title} -- {RESULTS[i][1]}"
        for i, title, _ in CRITERIA
        if i in RESULTS
    ]


@pytest.mark.parametrize("num, title, check", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, title, check):
    ok, msg = check()
    RESULTS[num] = (ok, msg)
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {title} -- {msg}")
    assert ok, msg


if __name__ == "__main__":
    for num, title, check in CRITERIA:
        RESULTS[num] = check()
    print("\n".join(summary_lines()))
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
