import time

import pytest

from artinstab.diagram import CoxeterDiagram, ArtinSequence, parse_seed
from artinstab.word import get_monoid

ACCEPTANCE = {}

B_SEED_TEXT = "generators: 2\nanchor: 1\nm 1 2 4\n"
D_SEED_TEXT = "generators: 3\nanchor: 1\nm 1 2 3\nm 1 3 3\n"


@pytest.fixture(scope="session")
def b3():
    return CoxeterDiagram.braid(3)


@pytest.fixture(scope="session")
def b4():
    return CoxeterDiagram.braid(4)


@pytest.fixture(scope="session")
def braid_seq():
    return ArtinSequence()


@pytest.fixture(scope="session")
def b_seq():
    return ArtinSequence(*parse_seed(B_SEED_TEXT))


@pytest.fixture(scope="session")
def d_seq():
    return ArtinSequence(*parse_seed(D_SEED_TEXT))


def el(d, text):
    """Element from a word literal such as '121' or 'e'."""
    from artinstab.word import parse_word
    return get_monoid(d).element(parse_word(text))


class Criterion:
    def __init__(self, number, title):
        self.number, self.title = number, title
        self.start = time.perf_counter()
        self.detail = ""

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        status = "PASS" if exc_type is None else "FAIL"
        line = f"criterion {self.number} {status}: {self.title} ({elapsed:.1f}s)"
        if self.detail:
            line += f" {self.detail}"
        print(line)
        ACCEPTANCE[self.number] = line
        return False


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[number])
