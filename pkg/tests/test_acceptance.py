"""One test per acceptance criterion; the labelled checks are listed in the terminal summary."""
import pytest

from gfmzv.acceptance import SUITES, run_suite


@pytest.mark.parametrize("name", list(SUITES))
def test_criterion(name, acceptance_log):
    res = run_suite(name)
    acceptance_log.append(res)
    assert res.passed, "\n".join(res.lines())
