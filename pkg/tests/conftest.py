"""
Pytest configuration and fixtures for aajones tests.
"""

from pathlib import Path

import pandas as pd
import pytest

from aajones.diagram import parse_pd

FIXTURES_CSV = Path(__file__).resolve().parent.parent / "aajones" / "data" / "fixtures.csv"

GRANNY_PD = (
    "X[1,4,2,5] X[3,6,4,7] X[5,2,6,3] X[7,10,8,11] X[9,12,10,1] X[11,8,12,9]"
)


@pytest.fixture(scope="session")
def fixture_table():
    """The packaged golden fixture table, indexed by name."""
    table = pd.read_csv(FIXTURES_CSV, dtype=str, keep_default_na=False)
    return table.set_index("name")


def _fixture_pd(name: str) -> str:
    table = pd.read_csv(FIXTURES_CSV, dtype=str, keep_default_na=False)
    return table.set_index("name").loc[name, "pd"]


@pytest.fixture
def trefoil():
    return parse_pd(_fixture_pd("trefoil_std"))


@pytest.fixture
def hopf():
    return parse_pd(_fixture_pd("hopf"))


@pytest.fixture
def aa_example():
    """The 10-crossing almost alternating link whose dealternator is crossing 0."""
    return parse_pd(_fixture_pd("AAExample"))


@pytest.fixture
def knot_15n41133():
    return parse_pd(_fixture_pd("15n41133"))


@pytest.fixture
def granny():
    """Connected sum of two left-handed trefoils."""
    return parse_pd(GRANNY_PD)


@pytest.fixture
def kink():
    return parse_pd("X[1,1,2,2]")


@pytest.fixture
def unknot():
    return parse_pd("loops=1")


@pytest.fixture
def settings():
    from aajones.config import Settings

    return Settings(progress=False)
