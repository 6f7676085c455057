from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from ordim.errors import BadParams
from ordim.generators import (
    FAMILIES,
    FamilySpec,
    embed_standard_example_in_majorization,
    embed_theorem12_in_majorization,
    figure1,
    generate,
    lex_grid,
    majorization_grid,
    majorizes,
    prop2_extension,
    prop2_grid,
    prop14_grid,
    standard_example,
    theorem12_grid,
)
from ordim.poset import is_extension, is_order_isomorphic
from ordim.representations import kind_of

SPECS = [
    FamilySpec("figure1"),
    FamilySpec("prop2_grid", {"k": 3}),
    FamilySpec("prop2_extension", {"k": 3}),
    FamilySpec("theorem12_grid", {"k": 3}),
    FamilySpec("prop14_grid", {"k": 3}),
    FamilySpec("lex_grid", {"a": 3, "b": 2}),
    FamilySpec("standard_example", {"n": 3}),
    FamilySpec("majorization_grid", {"n": 3, "denom": 6}),
    FamilySpec("majorization_embedding", {"k": 2}),
    FamilySpec("majorization_embedding", {"n": 4}),
]


def test_every_family_covered():
    assert {s.family for s in SPECS} == set(FAMILIES)


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: f"{s.family}-{sorted(s.params.items())}")
def test_generated_valid(spec):
    p, mu = generate(spec)
    assert p.n > 0
    if mu is not None:
        assert kind_of(p, mu) != "none"


def test_bad_params():
    with pytest.raises(BadParams):
        generate(FamilySpec("prop2_grid", {}))
    with pytest.raises(BadParams):
        generate(FamilySpec("nope"))
    with pytest.raises(BadParams):
        theorem12_grid(0)
    with pytest.raises(BadParams):
        standard_example(1)
    with pytest.raises(BadParams):
        majorization_grid(1, 4)
    with pytest.raises(BadParams):
        embed_standard_example_in_majorization(7)


def test_figure1_pairs():
    p = figure1()
    assert set(p.strict_pairs()) == {
        ("A", "C"), ("B", "C"), ("D", "E"), ("D", "F"), ("A", "F"), ("B", "E")
    }


def _sgn(x):
    return 1 if x > 0 else -1


@pytest.mark.parametrize("k", range(1, 6))
def test_signed_grid_structure(k):
    p, _ = theorem12_grid(k)
    for a in range(1, k + 1):
        for b in range(1, k + 1):
            assert p.lt(str(a), str(b)) == (a < b)
            assert p.lt(str(-a), str(-b)) == (a < b)
            assert p.le(str(-a), str(b)) == (a <= b)
            assert not p.le(str(b), str(-a))
    if k == 1:
        assert p.linear_order() == ["-1", "1"]


@pytest.mark.parametrize("k", range(1, 6))
def test_reciprocal_grid_structure(k):
    p, mu = prop14_grid(k)
    pos = [str(x) for x in range(1, k + 1)]
    neg = [str(-x) for x in range(1, k + 1)]
    for grp in (pos, neg):
        assert all(p.incomparable(x, y) for x in grp for y in grp if x != y)
    assert all(p.lt(x, y) for x in neg for y in pos)
    assert mu.rows[1][p.index("-1")] == -1


@pytest.mark.parametrize("k", range(1, 7))
def test_alternating_chain(k):
    ext = prop2_extension(k)
    base, _ = prop2_grid(k)
    assert is_extension(base, ext, require_linear=True)
    for x in range(1, k + 1):
        lo, hi = str(-x), str(x)
        assert ext.lt(lo, hi)
        assert not any(ext.lt(lo, z) and ext.lt(z, hi) for z in ext.labels)


def test_opposite_chains_grid():
    p, mu = prop2_grid(3)
    assert p.lt("1", "3") and p.lt("-1", "-3") and p.incomparable("-1", "1")
    assert kind_of(p, mu) != "none"


def test_lex_grid_total():
    p = lex_grid(3, 4)
    assert p.is_total() and p.lt("0,3", "1,0")


def test_standard_example():
    p = standard_example(3)
    assert p.lt("a1", "b2") and p.incomparable("a1", "b1")
    assert len(p.strict_pairs()) == 6


class TestMajorization:
    def test_six_three(self):
        p, mu = majorization_grid(3, 6)
        assert p.n == 7
        inc = [(x, y) for x in p.labels for y in p.labels if x < y and p.incomparable(x, y)]
        assert inc == [("(3,3,0)/6", "(4,1,1)/6")]
        assert kind_of(p, mu) == "plain"

    def test_two_outcomes_total(self):
        assert majorization_grid(2, 4)[0].is_total()

    @pytest.mark.parametrize("n, d", [(3, 6), (4, 6), (3, 9), (5, 5)])
    def test_against_oracle(self, n, d):
        p, _ = majorization_grid(n, d)
        want = oracles.partitions(d, n)
        got = {tuple(int(v) for v in lab[1:lab.index(")")].split(",")) for lab in p.labels}
        assert got == want
        for x in p.labels:
            for y in p.labels:
                px = [int(v) for v in x[1:x.index(")")].split(",")]
                py = [int(v) for v in y[1:y.index(")")].split(",")]
                assert p.le(x, y) == oracles.majorized(px, py)

    def test_comparator(self):
        f = lambda *v: tuple(Fraction(x, 6) for x in v)
        assert majorizes(f(2, 2, 2), f(6, 0, 0))
        assert not majorizes(f(3, 3, 0), f(4, 1, 1)) and not majorizes(f(4, 1, 1), f(3, 3, 0))


class TestEmbeddings:
    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_signed_grid_embeds(self, k):
        e = embed_theorem12_in_majorization(k)
        src, _ = theorem12_grid(k)
        assert e.poset.n == 2 * k
        assert is_order_isomorphic(src, e.poset) is not None
        for a in src.labels:
            for b in src.labels:
                pa, pb = e.points[e.mapping[a]], e.points[e.mapping[b]]
                assert src.le(a, b) == oracles.majorized(pa, pb)

    def test_single_level(self):
        e = embed_theorem12_in_majorization(1)
        assert e.poset.lt(e.mapping["-1"], e.mapping["1"])

    def test_frozen_points(self):
        e = embed_theorem12_in_majorization(2)
        assert e.denom == 48
        assert e.mapping == {
            "-2": "(26,13,9)/48", "-1": "(25,14,9)/48", "1": "(25,17,6)/48", "2": "(26,16,6)/48"
        }

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_standard_example_embeds(self, n):
        e = embed_standard_example_in_majorization(n)
        src = standard_example(n - 1)
        assert e.poset.n == 2 * (n - 1)
        assert all(len(x) == n and sum(x) == 1 for x in e.points.values())
        for a in src.labels:
            for b in src.labels:
                pa, pb = e.points[e.mapping[a]], e.points[e.mapping[b]]
                assert src.le(a, b) == oracles.majorized(pa, pb)
        if n <= 5:
            assert oracles.isomorphic(src, e.poset)


@given(st.integers(1, 6), st.integers(1, 6))
def test_lex_grid_property(a, b):
    p = lex_grid(a, b)
    assert p.n == a * b and p.is_total()


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: f"{s.family}-{sorted(s.params.items())}")
def test_json_round_trip(spec):
    import json

    from ordim.poset import Poset
    from ordim.representations import MultiUtility

    p, mu = generate(spec)
    text = p.dumps()
    q = Poset.from_json(json.loads(text))
    assert q == p and q.dumps() == text
    if mu is not None:
        assert MultiUtility.from_json(json.loads(json.dumps(mu.to_json()))) == mu
