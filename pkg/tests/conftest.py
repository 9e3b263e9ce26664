from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from knotmosaic.mosaic import load_mosaic
from knotmosaic.tabulation import cached_survey

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "fixtures"
GOLDEN = Path(__file__).parent / "golden"
DATA = Path(__file__).parent / "data"

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def fixture(name: str):
    return load_mosaic(FIXTURES / f"{name}.mosaic")


def corpus():
    """Every bundled board, links included."""
    return [load_mosaic(p) for p in sorted(FIXTURES.rglob("*.mosaic"))]


@pytest.fixture(scope="session")
def survey4():
    return cached_survey(4)


@pytest.fixture(scope="session")
def survey5():
    # the full 5x5 enumeration; shared by every test that needs it
    return cached_survey(5)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
