"""The eleven acceptance criteria, exact, one test each.

Each outcome line is printed and also collected for the terminal summary.
"""
import pytest

from bpskalc.acceptance import CRITERIA, run_one

from .conftest import ACCEPTANCE_LINES


@pytest.mark.parametrize("number", [num for num, _, _ in CRITERIA],
                         ids=[f"criterion_{num:02d}" for num, _, _ in CRITERIA])
def test_criterion(number):
    outcome = run_one(number)
    line = outcome.line()
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert outcome.passed, line
