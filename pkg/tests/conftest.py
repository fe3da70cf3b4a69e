from __future__ import annotations

import pytest

from shalika.exact_arith import LaurentPoly, parse_poly


@pytest.fixture
def x():
    return LaurentPoly.var(1, 1)


@pytest.fixture
def P():
    """Parse a polynomial in the given rank: ``P("x1 - x1^-1", 1)``."""
    return parse_poly


def pytest_terminal_summary(terminalreporter):
    lines = []
    for reports in terminalreporter.stats.values():
        for rep in reports:
            for key, value in getattr(rep, "user_properties", ()):
                if key == "acceptance" and rep.when == "call":
                    lines.append(value)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
