"""Shared fixtures, and a one-line-per-criterion summary for the acceptance tests."""

from __future__ import annotations

from collections import defaultdict

import pytest

from netlab.surface import PolygonSpec, build_surface

_criteria: dict[int, list[tuple[str, str]]] = defaultdict(list)


@pytest.fixture(scope="session")
def surfaces():
    return {n: build_surface(PolygonSpec.regular(n)) for n in range(3, 13)}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if call.when == "call" or (call.when == "setup" and call.excinfo is not None):
        outcome = "FAIL" if call.excinfo is not None else "PASS"
        _criteria[marker.args[0]].append((item.name, outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_criteria):
        runs = _criteria[k]
        ok = all(o == "PASS" for _, o in runs)
        names = ", ".join(n for n, _ in runs)
        terminalreporter.write_line(f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  ({names})")
