import sys
from pathlib import Path

import numpy as np
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from ordim.poset import Poset, transitive_closure  # noqa: E402
from ordim.representations import MultiUtility  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def posets(draw, min_n=1, max_n=8):
    """Closure of a random DAG over a random topological order."""
    n = draw(st.integers(min_n, max_n))
    perm = draw(st.permutations(range(n)))
    rel = np.eye(n, dtype=bool)
    for a in range(n):
        for b in range(a + 1, n):
            if draw(st.booleans()):
                rel[perm[a], perm[b]] = True
    return Poset([f"x{i}" for i in range(n)], transitive_closure(rel))


@st.composite
def dominance(draw, min_n=1, max_n=8, rows=(2, 4), spread=4):
    """A poset together with a multi-utility that represents it."""
    m = draw(st.integers(*rows))
    n = draw(st.integers(min_n, max_n))
    vecs = draw(
        st.lists(
            st.tuples(*[st.integers(0, spread - 1)] * m), min_size=n, max_size=n, unique=True
        )
    )
    labels = [f"x{i}" for i in range(n)]
    rel = np.array([[all(s <= t for s, t in zip(a, b)) for b in vecs] for a in vecs], dtype=bool)
    mu = MultiUtility(tuple(tuple(v[r] for v in vecs) for r in range(m)))
    return Poset(labels, rel), mu


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
