import random

import pytest

from cwcode.code import LinearCode
from cwcode.exactla import Mat, rank

BIN4_G = [[1, 1, 0, 0], [0, 1, 1, 1]]
BIN4_H = [[1, 1, 0, 1], [0, 0, 1, 1]]
TERN13_G = [
    [1, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2],
    [0, 1, 1, 1, 0, 0, 0, 1, 1, 1, 2, 2, 2],
    [0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1],
]
GRIESMER_G = [[1, 1, 1, 0, 0], [0, 0, 1, 1, 1]]
BIN5_G = [[1, 0, 0, 1, 0], [0, 1, 0, 1, 0], [0, 1, 1, 0, 1]]
FINAL_G = [[1, 0, 1, 0], [0, 1, 1, 0]]

ACCEPTANCE_LINES = []


def random_code(rng, q, n, k):
    """A uniformly drawn full-rank k x n generator over GF(q)."""
    while True:
        rows = [[rng.randrange(q) for _ in range(n)] for _ in range(k)]
        if rank(Mat(q, rows)) == k:
            return LinearCode.from_generator(q, rows), rows


def random_corpus(seed, count, qs=(2, 3, 4), max_n=8, max_qk=4 ** 4, min_n=2):
    """Random codes with q^k capped so brute-force subspace oracles stay fast."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        q = rng.choice(qs)
        n = rng.randint(min_n, max_n)
        k = rng.randint(1, n - 1)
        if q ** k > max_qk:
            continue
        out.append((q, *random_code(rng, q, n, k)))
    return out


@pytest.fixture
def bin4():
    return LinearCode.from_generator(2, BIN4_G)


@pytest.fixture
def tern13():
    return LinearCode.from_generator(3, TERN13_G)


@pytest.fixture
def griesmer_code():
    return LinearCode.from_generator(2, GRIESMER_G)


@pytest.fixture
def bin5():
    return LinearCode.from_generator(2, BIN5_G)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
