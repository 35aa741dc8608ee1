import pytest

_NOTES = pytest.StashKey[list]()
_RESULTS = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_NOTES] = []
    config.stash[_RESULTS] = {}


@pytest.fixture
def note(request):
    """Record a line for the acceptance summary (audit findings, timings)."""
    notes = request.config.stash[_NOTES]
    name = request.node.name

    def _note(msg):
        notes.append(f"{name}: {msg}")

    return _note


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    results = item.config.stash[_RESULTS]
    failed = rep.failed
    if rep.when == "call" or failed:
        prev = results.get(mark.args[0])
        results[mark.args[0]] = ("FAIL" if failed or (prev and prev[0] == "FAIL") else "PASS", mark.args[1])


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash[_RESULTS]
    if not results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(results):
        status, title = results[num]
        tr.write_line(f"[{status}] AC{num:02d} {title}")
    notes = config.stash[_NOTES]
    if notes:
        tr.section("acceptance notes")
        for line in notes:
            tr.write_line(line)
