import functools
import os
import sys
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(__file__))

import oracles  # noqa: E402

from pairwalls.numclass import NumClass  # noqa: E402

CLASSES = {
    "odd": (2, -1, Fraction(-1, 2), Fraction(5, 6)),
    "null": (2, 0, -1, 0),
    "quartic": (2, 0, -3, 4),
    "c3zero": (2, 0, -2, 0),
    "c3two": (2, 0, -2, 1),
}


@functools.lru_cache(maxsize=None)
def brute_walls(name, k=1):
    return frozenset(oracles.brute_walls(CLASSES[name], k))


@pytest.fixture(params=sorted(CLASSES))
def example(request):
    return request.param, NumClass(*CLASSES[request.param])
