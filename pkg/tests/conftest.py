import pytest

_criteria = []


def pytest_runtest_setup(item):
    marker = item.get_closest_marker("criterion")
    if marker:
        item.user_properties.append(("criterion", marker.args[0]))


def pytest_runtest_logreport(report):
    name = dict(report.user_properties).get("criterion")
    if name and (report.when == "call" or (report.when == "setup" and not report.passed)):
        _criteria.append((name, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _criteria:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")


@pytest.fixture(scope="session")
def table_1e5():
    from sapprimes import sieve
    return sieve(10 ** 5)
