from pathlib import Path

import pytest

from treecubic import harness

FIXTURES = Path(__file__).parent / "fixtures"

ACCEPTANCE_RESULTS: dict[str, bool] = {}


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def tmaps_n2():
    return list(harness.tmaps_via_bijection(2).values())


@pytest.fixture(scope="session")
def tmaps_n3():
    return list(harness.tmaps_via_bijection(3).values())


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed in sorted(ACCEPTANCE_RESULTS.items(), key=lambda kv: int(kv[0].split()[0])):
        terminalreporter.write_line(f"criterion {name}: {'PASS' if passed else 'FAIL'}")


@pytest.fixture(scope="session")
def tmaps_n4():
    return list(harness.tmaps_via_bijection(4).values())
