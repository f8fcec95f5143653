import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from unruh_ent.sweep import SweepConfig, run_sweep  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def one_observer_sweep():
    return run_sweep(SweepConfig(scenario="one", grid=201))


@pytest.fixture(scope="session")
def two_observer_sweep():
    return run_sweep(SweepConfig(scenario="two", grid=201))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
