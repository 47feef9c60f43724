import json
import sys
from pathlib import Path

import pytest

from plumbline import Arrangement, from_json

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# Every shipped arrangement fixture, smallest first.
ALL_FIXTURES = [
    "pencil_n2",
    "pencil_n3",
    "pencil_n4",
    "triangle",
    "nearpencil_n3",
    "nearpencil_n4",
    "nearpencil_n5",
    "two_triples",
    "pappus_violating",
]


def load_fixture(name: str) -> Arrangement:
    doc = json.loads((FIXTURES / f"{name}.json").read_text())
    return from_json(doc)


@pytest.fixture
def two_triples() -> Arrangement:
    return load_fixture("two_triples")


@pytest.fixture
def triangle() -> Arrangement:
    return load_fixture("triangle")


@pytest.fixture(params=ALL_FIXTURES)
def any_fixture(request) -> Arrangement:
    return load_fixture(request.param)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Repeat the acceptance pass/fail lines where they are always visible."""
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "summary_lines", lambda: [])()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
