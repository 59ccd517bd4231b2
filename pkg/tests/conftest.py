from fractions import Fraction

import hypothesis
from hypothesis import strategies as st

from cxlattice.space import FiniteSpace, Subspace

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")

small_fractions = st.builds(
    Fraction, st.integers(-4, 4), st.sampled_from([1, 1, 2, 3])
)
nonzero_fractions = small_fractions.filter(bool)


def space_of(n: int) -> FiniteSpace:
    return FiniteSpace(tuple(f"p{i}" for i in range(n)))


@st.composite
def matrices(draw, n=None, max_rows=5):
    n = n if n is not None else draw(st.integers(1, 6))
    k = draw(st.integers(0, max_rows))
    rows = draw(st.lists(st.lists(small_fractions, min_size=n, max_size=n), min_size=k, max_size=k))
    return n, rows


@st.composite
def subspaces(draw, min_points=1, max_points=6):
    n = draw(st.integers(min_points, max_points))
    _, rows = draw(matrices(n=n))
    return Subspace.span(space_of(n), rows)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
