import pytest

from koszulkit.xla import QQ, GF

FIELDS = [QQ, GF(101)]


@pytest.fixture(params=FIELDS, ids=["Q", "F101"])
def field(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
