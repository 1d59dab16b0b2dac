import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("galmod", derandomize=True, deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("galmod")


@pytest.fixture
def rng():
    return random.Random(20240611)


_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    props = dict(report.user_properties)
    if "acceptance" in props:
        status = "PASS" if report.passed else "FAIL"
        detail = props.get("acceptance_detail", "")
        _ACCEPTANCE.append("%s  %s%s" % (status, props["acceptance"], ": " + detail if detail else ""))


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
