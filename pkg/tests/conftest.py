"""Point-evaluation oracles shared by the test modules.

These work on plain ints/Fractions at a fixed (s, t) and never touch the
polynomial code, so agreement at several points is independent evidence.
"""
from fractions import Fraction

import pytest

# points where no Lucas number up to index ~60 vanishes
POINTS = [(2, -1), (1, 1), (3, -2), (2, 3), (5, 7), (-3, 2), (7, -5)]


def lucas_at(n, s0, t0):
    if n >= 0:
        a, b = 0, 1
        for _ in range(n):
            a, b = b, s0 * b + t0 * a
        return a
    hi, lo = Fraction(1), Fraction(0)
    for _ in range(-n):
        hi, lo = lo, (hi - s0 * lo) / t0
    return lo


def lucastorial_at(n, s0, t0):
    out = 1
    for m in range(1, n + 1):
        out *= lucas_at(m, s0, t0)
    return out


def lucasnomial_at(n, k, s0, t0):
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(lucastorial_at(n, s0, t0),
                    lucastorial_at(k, s0, t0) * lucastorial_at(n - k, s0, t0))


@pytest.fixture
def points():
    return POINTS


_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Record ``criterion(name, ok)``; the terminal summary prints one line per criterion."""

    def record(name, ok, detail=""):
        _ACCEPTANCE.append((name, bool(ok), detail))
        assert ok, f"{name}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        line = f"{'PASS' if ok else 'FAIL'}  {name}"
        if detail and not ok:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
