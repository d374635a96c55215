"""Acceptance criteria, one test each.

Every test prints a ``[PASS]``/``[FAIL]`` line; the lines are repeated in the
terminal summary.  Run ``python tests/test_acceptance.py`` for the lines alone.
"""
import sys

import pytest

from ocp_afem import verify

LINES = []


def check(number):
    res = verify.CRITERIA[number]()
    LINES.append(res.line())
    print(res.line())
    assert res.passed, res.line()


@pytest.mark.parametrize("number", [1, 2, 3, 10])
def test_fast_criterion(number):
    check(number)


def test_criterion_4_adaptive_rates():
    check(4)


def test_criterion_5_uniform_rate():
    check(5)


def test_criterion_6_effectivity():
    check(6)


def test_criterion_7_competitor_contrast():
    check(7)


@pytest.mark.slow
def test_criterion_8_cube_rates():
    check(8)


def test_criterion_9_reliability_efficiency():
    check(9)


if __name__ == "__main__":
    results = verify.run_all(slow=True)
    for r in results:
        print(r.line())
    sys.exit(0 if all(r.passed for r in results) else 1)
