"""
Shared pytest fixtures
"""

import logging
import os
import sys

import pytest

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'src'))

from config import MatsubaraSettings, QuadratureSettings, Settings, ThermoSettings, reset_config
from materials.dielectric import PerfectConductor, gold_drude, gold_plasma
from utils.logger import ROOT_LOGGER_NAME


@pytest.fixture(autouse=True)
def clean_config():
    """Every test starts from the default configuration"""
    reset_config()
    yield
    reset_config()


@pytest.fixture
def fast_settings():
    """Looser tolerances for tests that evaluate many Matsubara terms"""
    return Settings(matsubara=MatsubaraSettings(rel_tol=1e-9),
                    quadrature=QuadratureSettings(rel_tol=1e-8),
                    thermo=ThermoSettings())


@pytest.fixture
def perfect():
    return PerfectConductor()


@pytest.fixture
def drude():
    return gold_drude()


@pytest.fixture
def plasma():
    return gold_plasma()


@pytest.fixture(autouse=True)
def quiet_logging():
    """Drop handlers the CLI attached to the package logger"""
    yield
    root = logging.getLogger(ROOT_LOGGER_NAME)
    for handler in list(root.handlers):
        root.removeHandler(handler)
        handler.close()
