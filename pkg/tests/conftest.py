import pytest

# criterion number -> (description, [outcomes])
_CRITERIA: dict[int, list] = {}


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    num, desc = mark.args
    entry = _CRITERIA.setdefault(num, [desc, []])
    entry[1].append((item.name, call.excinfo is None))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        desc, results = _CRITERIA[num]
        failed = [name for name, ok in results if not ok]
        mark = "FAIL" if failed else "PASS"
        line = f"{mark} criterion {num:2d}: {desc}"
        if failed:
            line += f"  (failing: {', '.join(failed)})"
        terminalreporter.write_line(line)


@pytest.fixture(autouse=True)
def _fresh_cap(monkeypatch):
    monkeypatch.delenv("EXTORB_CAP", raising=False)
