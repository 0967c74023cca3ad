import pytest

_criteria: list[tuple[str, str, str]] = []


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion."""

    def record(label: str, ok: bool, detail: str = ""):
        status = "PASS" if ok else "FAIL"
        line = f"{label}: {status} {detail}".rstrip()
        print(line)
        _criteria.append((label, status, detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, status, detail in sorted(_criteria, key=lambda c: int(c[0].split()[1])):
        terminalreporter.write_line(f"{label}: {status} {detail}".rstrip())
