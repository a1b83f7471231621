from __future__ import annotations

import pytest

_OUTCOMES: dict = {}
_TITLES: dict = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, title = mark.args
            _TITLES[number] = title
            _OUTCOMES.setdefault(number, [])


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_logreport(report):
    if report.when != "call" and not report.failed:
        return
    number = dict(report.user_properties).get("criterion")
    if number is not None:
        _OUTCOMES[number].append(not report.failed)


def pytest_runtest_setup(item):
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        item.user_properties.append(("criterion", mark.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_OUTCOMES):
        results = _OUTCOMES[number]
        if not results:
            verdict = "NOT RUN"
        else:
            verdict = "PASS" if all(results) else "FAIL"
        passed = sum(results)
        terminalreporter.write_line(
            f"criterion {number:2d}: {verdict:7s} {_TITLES[number]} ({passed}/{len(results)} checks)")
