import functools
from pathlib import Path

import pytest
from hypothesis import settings

from ross.infopedia import compile_files

CORPUS = Path(__file__).resolve().parent.parent / "src" / "ross" / "corpus"
APPENDIX = CORPUS / "appendix"
REFERENCE = CORPUS / "reference"
SCENARIOS = CORPUS / "scenarios"
GOLDENS = CORPUS / "goldens"
INCLUDES = [APPENDIX, REFERENCE]

settings.register_profile("ross", max_examples=100, deadline=None)
settings.load_profile("ross")


def fixture_files() -> list[Path]:
    return sorted(CORPUS.glob("*/*.h"))


@functools.lru_cache(maxsize=None)
def compile_unit(*paths):
    """Compile once per argument tuple; callers treat the result as read-only."""
    return compile_files([str(p) for p in paths], [str(p) for p in INCLUDES])


@pytest.fixture(scope="session")
def appendix():
    return compile_unit(APPENDIX / "Appendix.h")


@pytest.fixture(scope="session")
def farmer():
    return compile_unit(CORPUS / "farmer" / "FarmerDonkey.h")


@pytest.fixture(scope="session")
def hit():
    return compile_unit(CORPUS / "hit" / "PersonHits.h")


# acceptance criteria report: one line per criterion in the terminal summary
ACCEPTANCE: dict[str, tuple[bool, str]] = {}
_SESSION_START = [0.0]


def pytest_sessionstart(session):
    import time

    _SESSION_START[0] = time.perf_counter()


def pytest_terminal_summary(terminalreporter):
    import time

    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0])):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}: {detail}")
    elapsed = time.perf_counter() - _SESSION_START[0]
    terminalreporter.write_line(f"whole test run: {elapsed:.2f} s (limit 10 s)")


# outcome of every test call in this session, keyed by test function name
OUTCOMES: dict[str, str] = {}


def pytest_collection_modifyitems(items):
    # acceptance criteria run last so they can reuse property-suite results from this session
    items.sort(key=lambda item: item.module.__name__ == "test_acceptance")


def pytest_runtest_logreport(report):
    if report.when == "call" or report.outcome != "passed":
        OUTCOMES[report.nodeid.split("::")[-1]] = report.outcome
