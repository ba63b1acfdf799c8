import pytest

from bergesat import kernels

BACKENDS = kernels.available()


@pytest.fixture(params=BACKENDS)
def backend(request, monkeypatch):
    """Run the test once per importable kernel backend."""
    impl = kernels.load(request.param)
    for name in ("berge_embed", "first_failing", "is_canonical"):
        monkeypatch.setattr(kernels, name, getattr(impl, name))
    return request.param


_CRITERIA = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the summary prints them after the run."""
    def record(number, ok, detail):
        _CRITERIA.append((number, bool(ok), detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(_CRITERIA, key=lambda c: c[0]):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
