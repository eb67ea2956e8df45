import pytest

from acgt.game_core import GameStore
from acgt.oracle import build_pool, witness_pool
from acgt.universe import DICOT_MISERE, DICOT_SCORING, FREE_MISERE, GUARANTEED_SCORING


@pytest.fixture
def store():
    return GameStore()


@pytest.fixture(scope="session")
def shared():
    """One store with the standard desk-scale pools, built once per run."""
    s = GameStore()
    dm = build_pool(s, DICOT_MISERE, 2, (0,))
    pools = {
        "store": s,
        "dicot-misere": dm,
        "dicot-misere-witness": witness_pool(s, dm, DICOT_MISERE, 500),
        "dicot-scoring": build_pool(s, DICOT_SCORING, 2, (-1, 0, 1), samples={2: 60}),
        "guaranteed": build_pool(s, GUARANTEED_SCORING, 2, (-1, 0, 1), samples={1: 60, 2: 60}),
        "zero": build_pool(s, FREE_MISERE, 2, (0,)),
    }
    return pools


ACCEPTANCE: list[str] = []


@pytest.fixture
def criterion():
    """``report(n, failures, detail)`` prints and records one PASS/FAIL line."""

    def report(n, failures, detail=""):
        line = f"criterion {n:>2}: {'PASS' if failures == 0 else 'FAIL'}  {detail}".rstrip()
        print(line)
        ACCEPTANCE.append(line)
        return failures

    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
