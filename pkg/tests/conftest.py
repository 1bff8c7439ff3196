import pytest

from qpkit.braid import BraidWord, concatenate, invert, parse_word
from qpkit.data import path

# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "property: randomized property suites")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])


W_LETTERS = (3, -4, -1, -3, -3, -2, -1, -3)


@pytest.fixture(scope="session")
def beta() -> BraidWord:
    return parse_word(path("beta.braid").read_text(), 5)


@pytest.fixture(scope="session")
def beta_prime() -> BraidWord:
    return parse_word(path("beta_prime.braid").read_text(), 5)


@pytest.fixture(scope="session")
def w_word() -> BraidWord:
    return BraidWord(5, W_LETTERS)


@pytest.fixture(scope="session")
def beta_prime_from_parts(w_word) -> BraidWord:
    """beta' assembled from its displayed pieces, independent of the data file."""
    W = lambda s: parse_word(s, 5)
    wi = invert(w_word)
    return concatenate(W("2"), w_word, W("-2 1 2"), wi, w_word, W("-2 3 1 2 -1 -3 2"), wi,
                       w_word, W("3 3 4 -3 -3"), wi)
