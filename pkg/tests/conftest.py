import pathlib

import pytest
from hypothesis import strategies as st

from posetc import from_relations

DATA = pathlib.Path(__file__).parent / "data"
GOLDEN = pathlib.Path(__file__).parent / "golden"

DOUBLE_DIAMOND_NAMES = ["0", "a", "b", "c", "d", "1"]
DOUBLE_DIAMOND_PAIRS = [
    ("0", "a"), ("0", "b"),
    ("a", "c"), ("a", "d"),
    ("b", "c"), ("b", "d"),
    ("c", "1"), ("d", "1"),
]
M3_NAMES = ["0", "a", "b", "c", "1"]
M3_PAIRS = [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")]


@pytest.fixture(scope="session")
def double_diamond():
    return from_relations(DOUBLE_DIAMOND_NAMES, DOUBLE_DIAMOND_PAIRS)


@pytest.fixture(scope="session")
def m3():
    return from_relations(M3_NAMES, M3_PAIRS)


@pytest.fixture(scope="session")
def chain2():
    return from_relations(["lo", "hi"], [("lo", "hi")])


@pytest.fixture(scope="session")
def bool2():
    # four-element Boolean lattice
    return from_relations(
        ["bot", "p", "q", "top"],
        [("bot", "p"), ("bot", "q"), ("p", "top"), ("q", "top")],
    )


@pytest.fixture(scope="session")
def double_diamond_path():
    return str(DATA / "double_diamond.poset")


@pytest.fixture(scope="session")
def m3_path():
    return str(DATA / "m3.poset")


def antichain(k):
    return from_relations([f"v{i}" for i in range(k)], [])


@st.composite
def small_posets(draw, max_n=6):
    """Arbitrary poset: random subset of the i < j pairs, then closure."""
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    names = [f"v{i}" for i in range(n)]
    return from_relations(names, [(names[i], names[j]) for i, j in chosen])
