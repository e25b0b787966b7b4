import pathlib

import pytest

FIXTURES = pathlib.Path(__file__).parent / "fixtures"

# one line per acceptance criterion, echoed uncaptured at the end of the run
ACCEPTANCE_LINES: list[str] = []


def record_acceptance(number: int, name: str, ok: bool) -> bool:
    line = f"ACCEPTANCE {number} {name}: {'PASS' if ok else 'FAIL'}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


@pytest.fixture(scope="session")
def fixtures_dir() -> pathlib.Path:
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
