import pathlib
import random

import pytest

from rmm import WeierstrassModel, compute_invariants
from rmm.errors import SingularCurve
from rmm.minimal import minimize

DATA_DIR = pathlib.Path(__file__).parent / "data"
FIXTURE = DATA_DIR / "allcurves_fixture.txt"


def random_model(rng, size=1000):
    """Random integral model with |ai| <= size, resampling singular tuples."""
    while True:
        try:
            return WeierstrassModel(*(rng.randrange(-size, size + 1) for _ in range(5)))
        except SingularCurve:
            continue


def random_minimal_signature(rng, size=1000):
    sig = compute_invariants(random_model(rng, size))[3]
    return minimize(sig)[0]


@pytest.fixture
def rng():
    return random.Random(20260823)


@pytest.fixture
def fixture_lines():
    return FIXTURE.read_text().splitlines()
