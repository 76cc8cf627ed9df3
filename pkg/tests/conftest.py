"""Shared pytest options and helpers.

The property-test runner takes its base seed, case count, and graph size from
the command line so failures reproduce exactly:

    pytest --seed 12345 --cases 500 --max-vertices 5
"""

import json

import pytest


def pytest_addoption(parser):
    group = parser.getgroup("property tests")
    group.addoption("--seed", type=int, default=20240801,
                    help="base seed for generated graphs and ideal families")
    group.addoption("--cases", type=int, default=200,
                    help="number of generated cases per property")
    group.addoption("--max-vertices", type=int, default=6,
                    help="vertex bound for generated graphs")


@pytest.fixture(scope="session")
def prop_seed(request) -> int:
    return request.config.getoption("--seed")


@pytest.fixture(scope="session")
def prop_cases(request) -> int:
    return request.config.getoption("--cases")


@pytest.fixture(scope="session")
def prop_max_vertices(request) -> int:
    return request.config.getoption("--max-vertices")


def counterexample(**payload) -> str:
    """One-line JSON dump embedded in assertion messages for reproduction."""
    return json.dumps(payload, sort_keys=True, default=str)
