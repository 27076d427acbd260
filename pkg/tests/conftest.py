import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from braidbench.coendmod import build_coend  # noqa: E402
from braidbench.doublemod import build_double  # noqa: E402
from braidbench.hopfcore import build_An  # noqa: E402
from braidbench.monadmod import build_dA  # noqa: E402


@pytest.fixture(scope="session")
def coend():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = build_coend(n)
        return cache[n]

    return get


@pytest.fixture(scope="session")
def an():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = build_An(n)
        return cache[n]

    return get


@pytest.fixture(scope="session")
def double(an, coend):
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = build_double(an(n), coend(n))
        return cache[n]

    return get


@pytest.fixture(scope="session")
def dA2(an, coend, double):
    return build_dA(an(2), coend(2), double=double(2))


# acceptance lines, printed in the terminal summary whatever the capture mode

_CRITERIA: dict[int, tuple[bool, str]] = {}
_ACCEPTANCE_COUNT = 11


@pytest.fixture
def criterion():
    def record(num: int, ok: bool, summary: str):
        _CRITERIA[num] = (ok, summary)
        print(f"criterion {num}: {'PASS' if ok else 'FAIL'} - {summary}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for num in range(1, _ACCEPTANCE_COUNT + 1):
        ok, summary = _CRITERIA.get(num, (False, "not run or errored"))
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'} - {summary}")
