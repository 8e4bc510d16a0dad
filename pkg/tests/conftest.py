from __future__ import annotations

import pytest

CRITERIA = {
    1: "gate exactness",
    2: "embedding validity",
    3: "decomposition equivalence",
    4: "two-colouring soundness",
    5: "round-trip restoration",
    6: "rejection purity",
    7: "classic families",
    8: "sub-update commutativity",
}

# criterion number -> (verdict, detail), filled by tests/test_acceptance.py
RESULTS: dict[int, tuple[str, str]] = {}


def record_criterion(number: int, ok: bool, detail: str = "") -> None:
    RESULTS[number] = ("PASS" if ok else "FAIL", detail)


@pytest.fixture
def record():
    return record_criterion


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        verdict, detail = RESULTS.get(k, ("FAIL", "did not run"))
        line = f"criterion {k} ({CRITERIA[k]}): {verdict}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
