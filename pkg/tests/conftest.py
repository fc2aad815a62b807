from collections import OrderedDict

import pytest

_outcomes: "OrderedDict[int, list[str]]" = OrderedDict()
_titles: dict[int, str] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("acceptance")
        if m:
            criterion, title = m.args
            _titles.setdefault(criterion, title)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("acceptance")
    if m is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _outcomes.setdefault(m.args[0], []).append("pass" if rep.passed else "fail")


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(_outcomes):
        verdict = "PASS" if all(o == "pass" for o in _outcomes[criterion]) else "FAIL"
        terminalreporter.write_line(f"criterion {criterion:>2}: {verdict}  {_titles.get(criterion, '')}")
