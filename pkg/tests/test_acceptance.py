"""End-to-end acceptance checks at full size; one PASS/FAIL line per criterion."""

import pytest

from vertexlab.acceptance import CRITERIA, run_criterion, status_line

RESULTS: dict[int, str] = {}


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{c.number:02d}" for c in CRITERIA])
def test_criterion(criterion):
    passed, reports, elapsed = run_criterion(criterion)
    line = status_line(criterion, passed, elapsed)
    RESULTS[criterion.number] = line
    print(line)
    for rep in reports:
        print("   ", rep)
    assert passed, "\n".join(str(r) for r in reports)


def pytest_terminal_summary_lines():
    return [RESULTS[n] for n in sorted(RESULTS)]
