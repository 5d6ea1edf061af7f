"""The fourteen acceptance criteria, one test each, with a PASS/FAIL line per criterion."""

from __future__ import annotations

import pytest

from h3g.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("number", [num for num, _, _ in CRITERIA], ids=[f"{num:02d}-{title}" for num, title, _ in CRITERIA])
def test_criterion(number, capsys):
    result = run_criterion(number)
    with capsys.disabled():
        print(f"\n{result.line()}")
    assert result.passed, result.detail


def test_all_criteria_listed():
    assert [num for num, _, _ in CRITERIA] == list(range(1, 15))
