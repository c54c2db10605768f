import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

_ACCEPTANCE_LINES = []


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", default=False, help="run long full-scale checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip = pytest.mark.skip(reason="slow; pass --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def acceptance_line():
    """Record one PASS/FAIL line for the acceptance summary."""
    state = {}

    def record(label, ok, detail=""):
        state["line"] = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  [{detail}]" if detail else "")
        print(state["line"])
        return ok

    yield record
    if "line" in state:
        _ACCEPTANCE_LINES.append(state["line"])


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
