import os
from pathlib import Path

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from models import create_system

settings.register_profile("default", max_examples=100, deadline=None)
settings.register_profile("fast", max_examples=20, deadline=None)
settings.register_profile("ci", max_examples=300, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))

FIXTURES_DIR = Path(__file__).resolve().parent / "fixtures"


@pytest.fixture
def rng():
    """Seeded generator for the randomized suites."""
    return np.random.default_rng(20240601)


@pytest.fixture
def m1_system():
    return create_system("M1")


@pytest.fixture
def m2_system():
    return create_system("M2")


@pytest.fixture
def fixtures_dir():
    return FIXTURES_DIR
