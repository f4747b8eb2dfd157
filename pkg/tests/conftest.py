import random

import hypothesis
import pytest

from rainbowdom.rdf import RainbowAssignment

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")

# acceptance criterion -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE = {}


def record(criterion, passed, detail=""):
    ACCEPTANCE[criterion] = (passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda c: (int(c.split()[0]), c)):
        passed, detail = ACCEPTANCE[key]
        line = f"criterion {key}: {'PASS' if passed else 'FAIL'}"
        if detail:
            line += f" - {detail}"
        terminalreporter.write_line(line)


def repair(g, labels, rng=None):
    """Make any 2-colour labelling valid by filling uncovered empty vertices.

    Giving a vertex a non-empty label never uncovers another vertex, so one
    pass suffices.
    """
    labels = list(labels)
    for v in range(g.n):
        if labels[v]:
            continue
        seen = 0
        for u in g.adjacency[v]:
            seen |= labels[u]
        if seen != 3:
            labels[v] = rng.choice((1, 2, 3)) if rng else 3
    return RainbowAssignment(2, tuple(labels))


@pytest.fixture
def rng():
    return random.Random(20261016)
