from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from vgauss.diagram import ChordDiagram, Slot

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def diagrams(draw, max_chords: int = 8, min_components: int = 1, max_components: int = 3, self_chords: bool = True):
    n = draw(st.integers(min_components, max_components))
    k = draw(st.integers(0, max_chords))
    words: list[list[Slot]] = [[] for _ in range(n)]
    signs = {}
    for c in range(1, k + 1):
        label = f"c{c}"
        signs[label] = draw(st.sampled_from((1, -1)))
        if self_chords or n < 2:
            ends = [draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))]
        else:
            a = draw(st.integers(0, n - 1))
            b = draw(st.integers(0, n - 2))
            ends = [a, b + (b >= a)]
        for comp, is_tail in zip(ends, (True, False)):
            pos = draw(st.integers(0, len(words[comp])))
            words[comp].insert(pos, Slot(label, is_tail))
    return ChordDiagram.from_words(words, signs)


def knots(max_chords: int = 8):
    return diagrams(max_chords=max_chords, max_components=1)


def links(max_chords: int = 8, max_components: int = 4):
    return diagrams(max_chords=max_chords, min_components=2, max_components=max_components)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


# one summary line per acceptance criterion
_ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance" in report.nodeid and report.when == "call" or (
        "test_acceptance" in report.nodeid and report.when == "setup" and report.outcome != "passed"
    ):
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"{_ACCEPTANCE[name]}  {name}")
