from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from compadv import make_source


def random_exact_source(rng: random.Random, n: int, top: int = 12):
    """Integer weights in 1..top normalised; small ``top`` makes ties common."""
    w = [rng.randint(1, top) for _ in range(n)]
    total = sum(w)
    return make_source([Fraction(x, total) for x in w])


def random_fine_source(rng: random.Random, n: int):
    """Weights drawn from a wide range, so ties are rare."""
    return random_exact_source(rng, n, top=10 ** 6)


def random_dyadic_source(rng: random.Random, n: int):
    """Split random leaves of a complete tree until it has n leaves."""
    depths = [0]
    while len(depths) < n:
        d = depths.pop(rng.randrange(len(depths)))
        depths += [d + 1, d + 1]
    rng.shuffle(depths)
    return make_source([Fraction(1, 2 ** d) for d in depths])


@pytest.fixture
def rng():
    return random.Random(12345)


@st.composite
def exact_sources(draw, min_n=1, max_n=7, top=20):
    n = draw(st.integers(min_n, max_n))
    w = draw(st.lists(st.integers(1, top), min_size=n, max_size=n))
    total = sum(w)
    return make_source([Fraction(x, total) for x in w])
