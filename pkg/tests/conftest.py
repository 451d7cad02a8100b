import pytest

_CRITERIA = {}


@pytest.fixture
def criterion(request):
    """Register the running test as acceptance criterion ``number``."""

    def register(number, title):
        _CRITERIA[request.node.nodeid] = (number, title)

    return register


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    outcomes = {}
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            if rep.nodeid not in _CRITERIA:
                continue
            if key != "passed":
                outcomes[rep.nodeid] = "FAIL"
            elif rep.when == "call":
                outcomes.setdefault(rep.nodeid, "PASS")
    terminalreporter.section("acceptance criteria")
    for nodeid, (number, title) in sorted(_CRITERIA.items(), key=lambda kv: kv[1][0]):
        terminalreporter.write_line(f"criterion {number}: {outcomes.get(nodeid, 'FAIL')}  {title}")
