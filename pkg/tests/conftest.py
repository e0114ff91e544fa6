import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=300, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    return request.config.stash.setdefault(ACCEPTANCE_KEY, [])


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(ACCEPTANCE_KEY, [])
    if not results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for res in sorted(results, key=lambda r: r.criterion):
        tr.write_line(f"[{'PASS' if res.passed else 'FAIL'}] {res.criterion:2d}. {res.name} ({res.seconds:.2f}s)")
        for line in res.lines():
            tr.write_line("      " + line)
    n = sum(r.passed for r in results)
    tr.write_line(f"{n}/{len(results)} criteria passed")
