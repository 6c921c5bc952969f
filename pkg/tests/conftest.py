"""Shared fixtures and the per-criterion acceptance report."""

import pytest

from tgflab.kuo import EnumerationOracle

ACCEPTANCE: dict[int, tuple[str, str]] = {}


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = ("PASS" if ok else "FAIL") + (f"  ({detail})" if detail else "")
    ACCEPTANCE[number] = (title, line)


@pytest.fixture(scope="session")
def oracle():
    """Enumeration oracle shared across tests; caches TGFs by spec."""
    return EnumerationOracle()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, line = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}  {title}: {line}")
