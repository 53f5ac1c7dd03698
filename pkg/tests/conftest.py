import random

import pytest
from hypothesis import strategies as st

from graphqec.f2linalg import BinaryMatrix
from graphqec.graph import SimpleGraph, ring, star
from graphqec.graphcode import build_code

R5_B = BinaryMatrix.from_rows(["11111"])
T4_B = BinaryMatrix.from_rows(["0110", "0011"])


@pytest.fixture
def r5():
    return ring(5)


@pytest.fixture
def t4():
    return star(4)


@pytest.fixture
def r5_code():
    return build_code(ring(5), R5_B)


@pytest.fixture
def t4_code():
    return build_code(star(4), T4_B)


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimpleGraph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def matrices(draw, max_rows=10, max_cols=10):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(0, max_cols))
    rows = draw(st.lists(st.integers(0, (1 << c) - 1), min_size=r, max_size=r))
    return BinaryMatrix(r, c, tuple(rows))


def random_graphs_with_kernel(count, n_range, seed):
    """Random graphs whose adjacency matrix has a nontrivial kernel."""
    from graphqec.graphcode import kernel_dimension

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(*n_range)
        g = SimpleGraph.from_edges(
            n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
        )
        if kernel_dimension(g) > 0:
            out.append(g)
    return out
