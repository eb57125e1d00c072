import pytest

# criterion name -> (status, detail); filled by test_acceptance.py
ACCEPTANCE: dict[str, tuple[str, str]] = {}


class Verdict:
    def __call__(self, name, ok, detail=""):
        self._put(name, "PASS" if ok else "FAIL", detail)
        return ok

    def skip(self, name, reason):
        self._put(name, "SKIP", reason)
        pytest.skip(reason)

    @staticmethod
    def _put(name, status, detail):
        ACCEPTANCE[name] = (status, detail)
        print(f"[{status}] {name}: {detail}")


@pytest.fixture
def verdict():
    return Verdict()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, (status, detail) in ACCEPTANCE.items():
        terminalreporter.write_line(f"{status:4}  {name}: {detail}")
