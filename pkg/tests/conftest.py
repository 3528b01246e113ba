from pathlib import Path

import pytest
from hypothesis import settings

from covrough import CoveringSpace, DecisionSystem

settings.register_profile("ci", max_examples=200, deadline=None)
settings.register_profile("dev", max_examples=50, deadline=None)
settings.load_profile("dev")

DATA = Path(__file__).parent / "data"

# three blocks over four objects, before and after object x3 is revised
FOUR = {"C": [[0, 3], [0, 1, 3], [2, 3]]}
FOUR_REVISED = {"C": [[0, 2, 3], [0, 1, 2, 3], [3]]}

FAMILY = {
    "C1": [[0, 1, 2, 3], [4]],
    "C2": [[0, 1], [2, 3, 4]],
    "C3": [[0, 1, 4], [2, 3]],
    "C4": [[0, 1], [2, 3], [4]],
}
FAMILY_REVISED = {**FAMILY, "C3": [[0, 1, 2, 4], [3]]}
DECISION = ({0, 1}, {2, 3, 4})


@pytest.fixture
def four():
    return CoveringSpace.build(4, FOUR)


@pytest.fixture
def four_revised():
    return CoveringSpace.build(4, FOUR_REVISED)


@pytest.fixture
def family():
    return DecisionSystem(CoveringSpace.build(5, FAMILY), DECISION)


@pytest.fixture
def family_revised():
    return DecisionSystem(CoveringSpace.build(5, FAMILY_REVISED), DECISION)


@pytest.fixture
def data_dir():
    return DATA


# one PASS/FAIL line per acceptance criterion, printed after the run
_criteria: dict[int, tuple[str, str, float]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call" and not rep.failed:
        return
    num, title = marker.args
    status = "PASS" if rep.passed else "FAIL"
    if num not in _criteria or status == "FAIL":
        _criteria[num] = (title, status, rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        title, status, secs = _criteria[num]
        terminalreporter.write_line(f"criterion {num}: {status}  {title}  ({secs:.2f} s)")
