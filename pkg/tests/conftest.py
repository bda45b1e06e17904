import hypothesis.strategies as st
from hypothesis import settings

from semicirc.ring import IntegerRing, ModularRing

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

Z = IntegerRing()
Z2, Z6, Z8, Z12, Z101 = (ModularRing(m) for m in (2, 6, 8, 12, 101))

ALL_RINGS = [Z, Z2, Z6, Z8, Z12, Z101]


def elements(R, bound=20):
    return st.integers(-bound, bound).map(R.from_integer)


@st.composite
def ring_and_row(draw, rings=ALL_RINGS, min_size=1, max_size=7, bound=9):
    R = draw(st.sampled_from(rings))
    row = draw(st.lists(elements(R, bound), min_size=min_size, max_size=max_size))
    return R, tuple(row)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
