import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def headline_moduli():
    """mod_h / mod_w at t = 2/5, 1/2, 1 on the 256-cell grid with 3 coarser levels.

    Shared by the modnum tests and the acceptance run; also records the wall time.
    """
    import time

    from skinlab.modnum import sweep

    start = time.perf_counter()
    results = sweep([0.4, 0.5, 1.0], 256, 3)
    elapsed = time.perf_counter() - start
    return {r.t: r for r in results}, elapsed


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record():
    """Collect one line per acceptance criterion for the terminal summary."""

    def add(line: str) -> None:
        ACCEPTANCE_LINES.append(line)
        print(line)

    return add


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
