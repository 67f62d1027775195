from __future__ import annotations

from pathlib import Path

import pytest

GOLDEN = Path(__file__).parent / "golden"

# The worked example: d = (1,2,3,4,4,4,2,1), n = 21, listed by part count.
EXAMPLE_D = (1, 2, 3, 4, 4, 4, 2, 1)
EXAMPLE_STRATA = {
    4: [(8, 6, 4, 3), (8, 5, 5, 3), (8, 5, 4, 4), (7, 7, 4, 3), (6, 6, 6, 3), (6, 5, 5, 5)],
    6: [
        (8, 6, 4, 1, 1, 1), (8, 6, 2, 2, 2, 1), (8, 5, 5, 1, 1, 1), (8, 5, 2, 2, 2, 2),
        (8, 3, 3, 3, 3, 1), (8, 3, 3, 3, 2, 2), (7, 7, 4, 1, 1, 1), (7, 7, 2, 2, 2, 1),
        (6, 6, 6, 1, 1, 1), (6, 3, 3, 3, 3, 3), (4, 4, 4, 4, 4, 1), (4, 4, 4, 3, 3, 3),
    ],
    7: [
        (8, 5, 4, 1, 1, 1, 1), (8, 5, 2, 2, 2, 1, 1), (8, 3, 3, 3, 2, 1, 1),
        (6, 5, 2, 2, 2, 2, 2), (6, 3, 3, 3, 2, 2, 2), (4, 4, 4, 3, 2, 2, 2),
    ],
    8: [
        (7, 5, 4, 1, 1, 1, 1, 1), (7, 5, 2, 2, 2, 1, 1, 1), (7, 3, 3, 3, 2, 1, 1, 1),
        (6, 6, 4, 1, 1, 1, 1, 1), (6, 6, 2, 2, 2, 1, 1, 1), (6, 5, 5, 1, 1, 1, 1, 1),
        (6, 5, 2, 2, 2, 2, 1, 1), (6, 3, 3, 3, 3, 1, 1, 1), (6, 3, 3, 3, 2, 2, 1, 1),
        (4, 4, 4, 4, 2, 1, 1, 1), (4, 4, 4, 3, 3, 1, 1, 1), (4, 4, 4, 3, 2, 2, 1, 1),
    ],
}
EXAMPLE_EXTREMES = {
    4: ((8, 6, 4, 3), (6, 5, 5, 5)),
    6: ((8, 6, 4, 1, 1, 1), (4, 4, 4, 3, 3, 3)),
    7: ((8, 5, 4, 1, 1, 1, 1), (4, 4, 4, 3, 2, 2, 2)),
    8: ((7, 5, 4, 1, 1, 1, 1, 1), (4, 4, 4, 3, 2, 2, 1, 1)),
}


def cells(p):
    return {(i, j) for i, a in enumerate(p, start=1) for j in range(1, a + 1)}


def delta_by_cells(p):
    """Independent diagonal-sequence oracle: count cells on each anti-diagonal."""
    counts = {}
    for i, j in cells(p):
        counts[i + j - 1] = counts.get(i + j - 1, 0) + 1
    return tuple(counts[k] for k in range(1, max(counts, default=0) + 1))


def conjugate_by_cells(p):
    cs = cells(p)
    cols = {}
    for i, j in cs:
        cols[j] = cols.get(j, 0) + 1
    return tuple(cols[j] for j in range(1, len(cols) + 1))


@pytest.fixture
def golden():
    return GOLDEN


# -- acceptance reporting ---------------------------------------------------

_criteria: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "_criterion", None)
    if marker is None:
        return
    num, title = marker
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        prev = _criteria.get(num, (title, "PASS"))[1]
        status = "PASS" if report.outcome == "passed" and prev == "PASS" else "FAIL"
        _criteria[num] = (title, status)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        rep._criterion = (m.args[0], m.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        title, status = _criteria[num]
        terminalreporter.write_line(f"[{status}] AC{num}: {title}")
