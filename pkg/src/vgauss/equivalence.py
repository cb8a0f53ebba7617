"""Equivalence of links under virtualized local moves, and distance bounds for knots.

Two links with the same number of components are related by vdelta,
vdelta-wedge or vsharp moves exactly when their parity vectors agree, and
by vdelta-circ or vpass moves exactly when their intersection numbers
agree.  Any two knots are related by each of these moves.

For knots the writhe spectrum bounds how far apart two diagrams are:
a single move changes the odd writhe by at most 2 (4 for vsharp), and
changes ``sum |J_n|`` by at most 3 (vdelta-circ) or 4 (vpass).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .diagram import ChordDiagram, Slot
from .invariants import lambda_vector, parity_vector, writhe_spectrum

__all__ = [
    "MoveClass",
    "Decision",
    "build_standard_link",
    "decide_equivalent",
    "lower_bounds",
    "distance_lower_bound",
]


class MoveClass(Enum):
    VDELTA = "vdelta"
    VDELTA_WEDGE = "vdelta-wedge"
    VDELTA_CIRC = "vdelta-circ"
    VSHARP = "vsharp"
    VPASS = "vpass"


_PARITY_CLASSES = {MoveClass.VDELTA, MoveClass.VDELTA_WEDGE, MoveClass.VSHARP}


@dataclass(frozen=True)
class Decision:
    equivalent: bool
    reason: str

    def __bool__(self) -> bool:
        return self.equivalent


def build_standard_link(a: Sequence[int]) -> ChordDiagram:
    """Standard diagram with ``|a_i|`` parallel chords of sign ``a_i`` from circle 1 to circle ``i``.

    ``a = (a_2, ..., a_n)``.  The blocks run along circle 1 in increasing
    ``i``; on circle ``i`` the heads appear in the reverse order, so the
    chords of a block run parallel when the circles are drawn side by side.
    """
    if len(a) < 1:
        raise ValueError("need at least two components")
    base: list[Slot] = []
    others: list[list[Slot]] = []
    signs = {}
    for i, ai in enumerate(a, start=2):
        labels = [f"h{i}_{k}" for k in range(1, abs(ai) + 1)]
        base.extend(Slot(lab, True) for lab in labels)
        others.append([Slot(lab, False) for lab in reversed(labels)])
        signs.update((lab, 1 if ai > 0 else -1) for lab in labels)
    return ChordDiagram.from_words([base, *others], signs)


def decide_equivalent(x: MoveClass, first: ChordDiagram, second: ChordDiagram) -> Decision:
    n, n2 = first.n_components, second.n_components
    if n != n2:
        return Decision(False, f"component mismatch: {n} vs {n2}")
    if n == 1:
        return Decision(True, "any two knots are equivalent")
    if x in _PARITY_CLASSES:
        p, q = parity_vector(first), parity_vector(second)
        word = "equal" if p == q else "differ"
        return Decision(p == q, f"parities {word}: {p} vs {q}")
    lam, lam2 = lambda_vector(first), lambda_vector(second)
    word = "equal" if lam == lam2 else "differ"
    return Decision(lam == lam2, f"lambda {word}: {lam} vs {lam2}")


def lower_bounds(x: MoveClass, first: ChordDiagram, second: ChordDiagram | None = None) -> dict[str, Fraction]:
    """Every applicable lower bound on the distance, as exact rationals.

    Keys: ``"odd_writhe"`` for the odd-writhe bound and ``"spectrum"`` for
    the bound from ``sum |J_n - J'_n|`` (vdelta-circ and vpass only).
    ``second`` defaults to the trivial knot.
    """
    if second is None:
        second = ChordDiagram.empty()
    if first.n_components != 1 or second.n_components != 1:
        raise ValueError("distance bounds are defined for knots")
    ja, jb = writhe_spectrum(first), writhe_spectrum(second)
    dj = abs(ja.odd_writhe - jb.odd_writhe)
    out = {"odd_writhe": Fraction(dj, 4 if x is MoveClass.VSHARP else 2)}
    if x is MoveClass.VDELTA_CIRC:
        out["spectrum"] = Fraction(ja.l1_distance(jb), 3)
    elif x is MoveClass.VPASS:
        out["spectrum"] = Fraction(ja.l1_distance(jb), 4)
    return out


def distance_lower_bound(x: MoveClass, first: ChordDiagram, second: ChordDiagram | None = None) -> int:
    """Ceiling of the largest bound from :func:`lower_bounds`."""
    return math.ceil(max(lower_bounds(x, first, second).values()))
