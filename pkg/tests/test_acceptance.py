"""Runs the twelve acceptance criteria; each prints one PASS/FAIL line.

Run directly (python3 tests/test_acceptance.py) for the bare matrix.
"""

import sys

import pytest

from sqw.acceptance import CRITERIA, run_criterion

# stated runtime budgets in seconds
BUDGET = {1: 30, 2: 5, 3: 10, 4: 60, 5: 10, 6: 120, 7: 120, 8: 60, 9: 90, 10: 120, 11: 30, 12: 30}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    res = run_criterion(number)
    with capsys.disabled():
        print("\n" + res.line())
    assert res.passed, f"{res.detail}; witness: {res.witness}"
    assert res.seconds < BUDGET[number]


if __name__ == "__main__":
    failed = 0
    for k in sorted(CRITERIA):
        res = run_criterion(k)
        print(res.line(), flush=True)
        failed += not res.passed
    sys.exit(1 if failed else 0)
