"""The thirteen acceptance criteria, one test each, with --deep checks enabled.

Each test prints its criterion line ("[PASS] n. title ...") straight to the
terminal so the table shows up even when pytest captures output.
"""

import re

import pytest

from minordensity.acceptance import _run, criteria

CRITERIA = criteria(deep=True)


def _id(item):
    number, title, _, _ = item
    return f"{number:02d}-" + re.sub(r"[^a-z0-9]+", "-", title.lower()).strip("-")


def test_all_thirteen_criteria_present():
    assert [c[0] for c in CRITERIA] == list(range(1, 14))


@pytest.mark.parametrize("item", CRITERIA, ids=[_id(c) for c in CRITERIA])
def test_criterion(item, capsys):
    check = _run(*item)
    with capsys.disabled():
        print("\n" + check.line())
    assert check.passed, check.detail
