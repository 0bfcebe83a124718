import random

import pytest

from linext.families import builtin_corpus, random_poset


@pytest.fixture(scope="session")
def corpus():
    return builtin_corpus()


@pytest.fixture()
def rng():
    return random.Random(0xC0FFEE)


def random_posets(count: int, nmax: int = 8, seed: int = 7):
    """Deterministic stream of small random posets shared by oracle tests."""
    r = random.Random(seed)
    out = []
    for _ in range(count):
        n = r.randint(2, nmax)
        prob = r.choice([0.0, 0.1, 0.25, 0.4, 0.6, 0.8])
        out.append(random_poset(n, prob, seed=r.randrange(10**9)))
    return out
