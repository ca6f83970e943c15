import io

import pytest

from engine.grundy import grundy_sieve, odd_fibonacci_set
from sgtool import GrundyTool


@pytest.fixture(scope="session")
def odd_fib_table():
    return grundy_sieve(odd_fibonacci_set(), 100_000)


@pytest.fixture
def run_tool(monkeypatch):
    """Run the CLI in-process; returns (exit code, stdout text)."""
    for name in ('SGTOOL_MAX', 'SGTOOL_MAX_PERIOD', 'SGTOOL_MAX_PREPERIOD', 'SGTOOL_WORKERS', 'SGTOOL_LOG_FILE'):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv('SGTOOL_LOG_LEVEL', 'WARNING')

    def run(*argv, stdin=""):
        stdout = io.StringIO()
        tool = GrundyTool(stdin=io.StringIO(stdin), stdout=stdout)
        code = tool.run(list(argv))
        return code, stdout.getvalue()

    return run
