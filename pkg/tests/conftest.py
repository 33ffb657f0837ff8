import random

import pytest


@pytest.fixture
def rng():
    return random.Random(20240601)


def random_word(rng: random.Random, max_len: int, max_alpha: int) -> tuple[int, ...]:
    n = rng.randint(0, max_len)
    k = rng.randint(1, max_alpha)
    return tuple(rng.randrange(k) for _ in range(n))
