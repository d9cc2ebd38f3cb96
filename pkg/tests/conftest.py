import pytest

# filled by tests/test_acceptance.py, printed once at the end of the run
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        status, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {status}  {detail}")


@pytest.fixture
def record():
    def _record(k, ok, detail=""):
        ACCEPTANCE[k] = ("PASS" if ok else "FAIL", detail)
        print(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
        return ok

    return _record
