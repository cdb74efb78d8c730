"""The acceptance criteria, one test each.

Each test prints a single ``[PASS]`` / ``[FAIL]`` line plus the checker's
notes.  Also runnable as ``python tests/test_acceptance.py [N ...]``.
"""
import sys

import pytest

from semicoclass import acceptance


@pytest.mark.parametrize("number", sorted(acceptance.CRITERIA))
def test_criterion(number, capsys):
    res = acceptance.run_criterion(number)
    with capsys.disabled():
        print()
        print(res.line())
        for line in res.details:
            print("    " + line)
    assert res.passed, "\n".join(res.details)


if __name__ == "__main__":
    nums = [int(a) for a in sys.argv[1:]] or None
    results = acceptance.run(nums, report=print)
    sys.exit(0 if all(r.passed for r in results) else 1)
