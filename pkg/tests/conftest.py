import pytest

from pythsec.elements import secondary_elements
from pythsec.triples import iter_survey

SURVEY_M = 50
SURVEY_DELTAS = (1, 2, 3)


@pytest.fixture(scope="session")
def survey():
    """(params, normative report) for every primitive (m, n), m <= 50, delta in 1..3."""
    return [(p, secondary_elements(p)) for p in iter_survey(SURVEY_M, SURVEY_DELTAS)]


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
