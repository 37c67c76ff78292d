import functools

import pytest

from strengthlab import corpus
from strengthlab.core import Morphism

ACCEPTANCE_LINES = []


@functools.lru_cache(maxsize=None)
def bundle(name, **params):
    """Corpus bundles are immutable after construction, so tests share them."""
    return corpus.build(name, **params)


def bump(m: Morphism, at=0):
    """Change the table entry at position ``at`` to the next codomain element."""
    table = list(m.table)
    cod = m.cod.carrier
    table[at] = cod[(cod.index(table[at]) + 1) % len(cod)]
    return Morphism(m.dom, m.cod, table)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture
def record_acceptance():
    return ACCEPTANCE_LINES.append
