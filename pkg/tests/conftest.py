"""Shared fixtures.  The acceptance verdicts are echoed in the terminal summary."""

from __future__ import annotations

import pytest

VERDICTS: list[str] = []


@pytest.fixture
def verdict():
    """Record and print one ``criterion N: PASS|FAIL`` line, then assert."""
    def record(number: int, title: str, ok: bool, detail: str = "") -> None:
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            line += f"  [{detail}]"
        VERDICTS.append(line)
        print(line)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter):
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(VERDICTS):
            terminalreporter.write_line(line)
