import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from nilrev.nilmat import Matrix
from nilrev.scalar import ScalarRing, from_coords

RINGS = list(ScalarRing)

rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))


def scalars(ring, nonzero=False):
    s = st.lists(rationals, min_size=ring.dim, max_size=ring.dim).map(lambda c: from_coords(c, ring))
    if nonzero:
        s = s.filter(bool)
    return s


@st.composite
def nilpotent_matrices(draw, ring, n_min=1, n_max=5, star=False):
    n = draw(st.integers(n_min, n_max))
    rows = [[ring.zero()] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = draw(scalars(ring, nonzero=star and j == i + 1))
    return Matrix(rows, ring)


@st.composite
def signed_unipotent_matrices(draw, ring, n_min=1, n_max=5, unipotent=False):
    n = draw(st.integers(n_min, n_max))
    rows = [[ring.zero()] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = ring.coerce(1 if unipotent else draw(st.sampled_from((1, -1))))
        for j in range(i + 1, n):
            rows[i][j] = draw(scalars(ring))
    return Matrix(rows, ring)


@pytest.fixture
def rng():
    return random.Random(20261018)


@pytest.fixture(params=RINGS, ids=lambda r: r.value)
def ring(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
