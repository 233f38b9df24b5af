import pytest

_acceptance_key = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record one acceptance line: criterion(number, title, passed, seconds, limit)."""
    lines = request.config.stash.setdefault(_acceptance_key, [])

    def record(number, title, passed, seconds, limit):
        status = "PASS" if passed and seconds < limit else "FAIL"
        lines.append((number, f"{status}  criterion {number}: {title}  ({seconds:.2f}s, limit {limit}s)"))

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_acceptance_key, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(lines):
        terminalreporter.write_line(line)
