"""Shared fixtures: the catalog operators, hypothesis profile."""

from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from shiftchaos import catalog

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def _op(name: str):
    return catalog.build_example(name)


@pytest.fixture(scope="session")
def ex1_op():
    return _op("ex1_s_Z_hc_not_dc")


@pytest.fixture(scope="session")
def ex2_op():
    return _op("ex2_kothe_dc_not_hc")


@pytest.fixture(scope="session")
def ex3_op():
    return _op("ex3_s_Z_hc_not_mly")


@pytest.fixture(scope="session")
def ex4_op():
    return _op("ex4_lp_mly_not_hc")


@pytest.fixture(scope="session")
def rolewicz_op():
    return _op("rolewicz_lp_N")


@pytest.fixture(scope="session")
def unweighted_op():
    return _op("unweighted_lp_N")


@pytest.fixture(scope="session")
def halfweights_op():
    return _op("halfweights_bilateral")
