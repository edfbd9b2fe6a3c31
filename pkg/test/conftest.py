import fractions
import os
import random

import pytest

import py_qpp as pq

SEED = int(os.getenv("QPP_TEST_SEED", "2024"))
# the N-table every table-backed test shares
TABLE_MAX_N = 8


@pytest.fixture(scope="session")
def table() -> pq.NTable:
    """
    table is the fixture that enumerates the overpartition pairs up to TABLE_MAX_N once.

    Returns:
        pq.NTable: The table.
    """
    return pq.build_ntable(TABLE_MAX_N)


@pytest.fixture
def rng() -> random.Random:
    """
    rng is the fixture that returns a random generator seeded from QPP_TEST_SEED.

    Returns:
        random.Random: The generator.
    """
    return random.Random(SEED)


def random_rational(rng: random.Random, height: int = 5) -> pq.Rational:
    """
    random_rational draws a small-height rational, zero included.
    """
    return pq.rational(fractions.Fraction(rng.randint(-height, height), rng.randint(1, height)))
