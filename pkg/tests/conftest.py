import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(Path(__file__).parent))

CONFIGS = ROOT / "configs"
GOLDEN = Path(__file__).parent / "golden"

_acceptance_lines: list[str] = []


@pytest.fixture
def report():
    """Collects one PASS/FAIL line per acceptance criterion for the terminal summary."""

    def _report(name: str, ok: bool, detail: str) -> None:
        _acceptance_lines.append(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")

    return _report


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
