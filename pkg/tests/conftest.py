import pytest

from maxclass.constructions import exceptional_sequence, metabelian_sequence
from maxclass.harness.search import SearchConfig, search_sequences
from maxclass.transforms import translate


@pytest.fixture(scope="session")
def small_corpus():
    """Consistent type-3 prefixes over GF(3): a full search plus constructed ones."""
    found = search_sequences(SearchConfig(3, 3, 20, normalize=False)).sequences
    built = [
        exceptional_sequence(3, 9, 1, 40),
        exceptional_sequence(3, 9, 2, 40),
        translate(exceptional_sequence(3, 9, 2, 40), 1),
        metabelian_sequence(3, "codim-2-abelian", 40, 3),
        metabelian_sequence(3, "abelian-maximal-ideal", 40, 3),
    ]
    return found + built


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
