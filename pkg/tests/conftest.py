import random
from fractions import Fraction
from pathlib import Path

import pytest

from qgdf.quiver import Rep, d4_quiver, equioriented_a

DATA = Path(__file__).parent / "data"


def random_rep(quiver, dims, rng, lo=-2, hi=2):
    mats = []
    for s, t in quiver.arrows:
        mats.append([[Fraction(rng.randint(lo, hi)) for _ in range(dims[s - 1])]
                     for _ in range(dims[t - 1])])
    return Rep(quiver, tuple(dims), mats)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def d4_path():
    return DATA / "d4.json"


QUIVERS = [equioriented_a(n) for n in range(1, 5)] + [d4_quiver()]


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[k])
