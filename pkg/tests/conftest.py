from __future__ import annotations

import os

import pytest

from acceptance_log import LINES


def pytest_addoption(parser):
    parser.addoption("--deep", action="store_true", default=False, help="run the D5/E6 exhaustive searches")


@pytest.fixture(scope="session")
def deep(request) -> bool:
    return request.config.getoption("--deep") or os.environ.get("SCHUBERT_DEEP") == "1"


def pytest_terminal_summary(terminalreporter):
    if not LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in LINES:
        terminalreporter.write_line(line)
