"""Shared fixtures: the acceptance-criterion recorder.

``criterion`` records a numbered pass/fail verdict and then asserts it,
so a failing criterion both fails its test and still shows up in the
summary block that ``pytest_terminal_summary`` prints at the end of the
run (one line per criterion, visible in plain ``pytest -v`` output).
"""

import pytest

_RESULTS: list[tuple[int, str, bool]] = []


@pytest.fixture
def criterion():
    def record(number: int, description: str, passed: bool) -> None:
        _RESULTS.append((number, description, bool(passed)))
        assert passed, f"criterion {number:02d} failed: {description}"

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, description, passed in sorted(_RESULTS):
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(
            f"criterion {number:02d} [{verdict}] {description}"
        )
