import sys

import pytest

from siegeltrace.census import CensusBank


@pytest.fixture(scope="session")
def bank(tmp_path_factory):
    """One census bank per test session, backed by a throwaway cache."""
    cache = tmp_path_factory.mktemp("census-cache")
    return CensusBank(cache_dir=cache, workers=1)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Echo the acceptance criterion results after the test summary."""
    module = sys.modules.get("test_acceptance") or sys.modules.get(
        "tests.test_acceptance")
    lines = getattr(module, "ACCEPTANCE_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
