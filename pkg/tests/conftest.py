import numpy as np
import pytest

from sturmian import orbitals


@pytest.fixture
def ground():
    return orbitals.validate(1, 0, 1, 0, 1)


@pytest.fixture
def node_spec():
    # R ~ e^{-r} L^1_1(2r), zero at r = 1
    return orbitals.validate(2, 0, 1, 1, 1)


@pytest.fixture
def log_grid():
    return np.geomspace(0.1, 20.0, 64)


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion."""
    def record(label, ok, detail):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}: {detail}")
        print(ACCEPTANCE_LINES[-1])
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
