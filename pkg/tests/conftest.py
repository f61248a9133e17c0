from __future__ import annotations

import contextlib
from pathlib import Path

import pytest

from udsmimic.catalog import load_catalog, reference_catalog

DATA = Path(__file__).parent / "data"

_ACCEPTANCE: list[tuple[str, bool]] = []


@pytest.fixture(scope="session")
def ref():
    return reference_catalog()


@pytest.fixture(scope="session")
def combined_rows():
    """Bottom-half rows transcribed independently of the combiner."""
    return load_catalog(str(DATA / "combined_rows.catalog"))


@pytest.fixture
def criterion():
    """Record pass/fail for an acceptance criterion, re-raising failures."""

    @contextlib.contextmanager
    def _check(label: str):
        try:
            yield
        except BaseException:
            _ACCEPTANCE.append((label, False))
            raise
        _ACCEPTANCE.append((label, True))

    return _check


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}")
