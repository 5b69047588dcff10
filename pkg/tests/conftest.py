import os

import pytest
from hypothesis import HealthCheck, settings

# a lean default keeps the suite quick; HYPOTHESIS_PROFILE=thorough runs more cases
settings.register_profile("default", max_examples=25, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=1000, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


ACCEPTANCE_LINES = pytest.StashKey[dict]()


@pytest.fixture
def record_criterion(request):
    """Store a criterion's one-line verdict for the terminal summary."""
    lines = request.config.stash.setdefault(ACCEPTANCE_LINES, {})

    def record(number: int, line: str) -> None:
        lines[number] = line

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_LINES, {})
    if lines:
        terminalreporter.section("acceptance criteria")
        for number in sorted(lines):
            terminalreporter.write_line(lines[number])
