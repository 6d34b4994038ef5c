import pytest

_RESULTS = {}


@pytest.fixture
def report():
    """Record one acceptance verdict; the terminal summary prints them all."""

    def record(criterion, ok, detail=""):
        _RESULTS[criterion] = (bool(ok), detail)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(_RESULTS):
        ok, detail = _RESULTS[criterion]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {criterion}: {detail}")
