import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from wordperm import Word  # noqa: E402

import oracles  # noqa: E402

TEXT_LEN = 1 << 14

NAMED = {
    "fibonacci": ("01", "0"),
    "thue-morse": ("01", "10"),
    "period-doubling": ("01", "00"),
}


@pytest.fixture(scope="session")
def words():
    return {name: Word(name) for name in NAMED}


@pytest.fixture(scope="session")
def texts():
    return {name: oracles.morphic_text(a, b, TEXT_LEN) for name, (a, b) in NAMED.items()}


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[number])
