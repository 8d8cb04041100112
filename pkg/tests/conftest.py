from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from bicx.core import Bicomplex, Complex

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)
nonzero_rationals = rationals.filter(lambda q: q != 0)
complexes = st.builds(Complex, rationals, rationals)
bicomplexes = st.builds(Bicomplex, complexes, complexes)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record_criterion():
    """Record a pass/fail line for the terminal summary; returns the recorder."""

    def record(number: int, title: str, ok: bool, detail: str = "") -> bool:
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] criterion {number:>2}: {title}"
        if detail and not ok:
            line += f" -- {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)


def q(x, y=1) -> Fraction:
    return Fraction(x, y)
