import pytest

from distillery.gatelist import Gate, GateKind, GateList
from distillery.scheduler import Schedule

ACCEPTANCE_LINES: list[str] = []


def schedule_from_demand(demand) -> Schedule:
    """A schedule whose step t holds demand[t] T gates (or one H when zero)."""
    width = max(max(demand, default=1), 1)
    gates, steps = [], []
    for d in demand:
        idx = []
        ops = [Gate(GateKind.T, (q,)) for q in range(d)] or [Gate(GateKind.H, (0,))]
        for g in ops:
            idx.append(len(gates))
            gates.append(g)
        steps.append(tuple(idx))
    return Schedule(width, tuple(steps), GateList(width, tuple(gates)), all(d <= 1 for d in demand))


@pytest.fixture(scope="session")
def from_demand():
    return schedule_from_demand


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
