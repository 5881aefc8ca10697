import pytest

from pentagram_atlas import build_atlas, enumerate_pentagrams, load_table1, make_context, validate_pentagram

GHZ = (
    ("XII", "IXI", "IIX", "XXX"),
    ("XII", "IYI", "IIY", "XYY"),
    ("YII", "IXI", "IIY", "YXY"),
    ("YII", "IYI", "IIX", "YYX"),
    ("XXX", "XYY", "YXY", "YYX"),
)


@pytest.fixture(scope="session")
def pentagrams():
    return enumerate_pentagrams(threads=1)


@pytest.fixture(scope="session")
def golden():
    return load_table1()


@pytest.fixture(scope="session")
def atlas(pentagrams, golden):
    return build_atlas(pentagrams, golden)


@pytest.fixture(scope="session")
def ghz():
    return validate_pentagram(make_context(c) for c in GHZ)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
