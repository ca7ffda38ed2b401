"""Shared fixtures."""

import random

import pytest

from algebra.domains import QQ
from algebra.matrix import Matrix
from mnk.config import get_settings

TRIBONACCI = [[0, 0, 1], [1, 0, 1], [0, 1, 1]]
PLASTIC = [[0, 0, 1], [1, 0, 1], [0, 1, 0]]
CAT_MAP = [[2, 1], [1, 1]]


@pytest.fixture
def rng() -> random.Random:
    """Seeded from MNK_SEED so a failing draw can be replayed."""
    return random.Random(get_settings().seed)


@pytest.fixture
def tribonacci() -> Matrix:
    return Matrix.from_rows(TRIBONACCI, QQ)


@pytest.fixture
def cat_map() -> Matrix:
    return Matrix.from_rows(CAT_MAP, QQ)


def random_rational_matrix(rng: random.Random, rows: int, cols: int, bound: int = 4) -> Matrix:
    return Matrix.from_rows(
        [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)], QQ
    )
