import json
from pathlib import Path

import pytest

from bertrandnum import NumSys, RealBase

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load_system(name: str) -> NumSys:
    with open(FIXTURES / f"{name}.json") as fh:
        return NumSys.from_json(json.load(fh))


@pytest.fixture
def zeckendorf():
    return load_system("zeckendorf")


@pytest.fixture
def phi_noncanonical():
    return load_system("phi_noncanonical")


@pytest.fixture
def base3_canonical():
    return load_system("base3_canonical")


@pytest.fixture
def base3_noncanonical():
    return load_system("base3_noncanonical")


@pytest.fixture
def ex31_not_prolongable():
    return load_system("ex31_not_prolongable")


@pytest.fixture
def ex31_not_prefix_closed():
    return load_system("ex31_not_prefix_closed")


@pytest.fixture
def ex53_oscillating():
    return load_system("ex53_oscillating")


@pytest.fixture
def phi_squared_system():
    return load_system("phi_squared")


# exactly specified bases used all over the suite
def golden_ratio() -> RealBase:
    return RealBase.algebraic((-1, -1, 1), (1, 2))


def golden_ratio_squared() -> RealBase:
    return RealBase.algebraic((1, -3, 1), (2, 3))


def tribonacci() -> RealBase:
    return RealBase.algebraic((-1, -1, -1, 1), (1, 2))


@pytest.fixture
def phi():
    return golden_ratio()


@pytest.fixture
def phi2():
    return golden_ratio_squared()


@pytest.fixture
def trib():
    return tribonacci()
