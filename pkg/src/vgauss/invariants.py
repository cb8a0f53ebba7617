"""Numeric invariants of Gauss diagrams.

Links: linking matrix, intersection numbers ``lambda_i`` and parities.
Knots: chord index, the n-writhe spectrum and the odd writhe.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .diagram import ChordDiagram

__all__ = [
    "WritheSpectrum",
    "linking_matrix",
    "lambda_vector",
    "parity_vector",
    "chord_index",
    "chord_indices",
    "writhe_spectrum",
    "invariant_report",
]


@dataclass(frozen=True)
class WritheSpectrum:
    """Map ``n -> J_n`` for ``n != 0``; zero entries are dropped on construction."""

    values: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {int(n): int(v) for n, v in sorted(self.values.items()) if v != 0}
        if 0 in cleaned:
            raise ValueError("J_0 is not part of the spectrum")
        object.__setattr__(self, "values", cleaned)

    @property
    def odd_writhe(self) -> int:
        return sum(v for n, v in self.values.items() if n % 2)

    def __getitem__(self, n: int) -> int:
        return self.values.get(n, 0)

    def scaled(self, m: int) -> WritheSpectrum:
        return WritheSpectrum({n: m * v for n, v in self.values.items()})

    def l1_distance(self, other: WritheSpectrum) -> int:
        keys = set(self.values) | set(other.values)
        return sum(abs(self[n] - other[n]) for n in keys)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{n}: {v}" for n, v in self.values.items()) + "}"


def linking_matrix(d: ChordDiagram) -> list[list[int]]:
    """Entry ``(i, j)`` sums the signs of chords with tail on ``i`` and head on ``j``."""
    n = d.n_components
    lk = [[0] * n for _ in range(n)]
    for c in d.chords:
        if not c.is_self:
            lk[c.tail.component][c.head.component] += c.sign
    return lk


def lambda_vector(d: ChordDiagram) -> list[int]:
    """Intersection numbers.

    Computed from the linking matrix and, independently, as the sum of
    endpoint signs of nonself-chords on each component; the two must agree.
    """
    lk = linking_matrix(d)
    n = d.n_components
    by_lk = [sum(lk[j][i] for j in range(n)) - sum(lk[i][j] for j in range(n)) for i in range(n)]
    by_endpoints = [0] * n
    for c in d.chords:
        if not c.is_self:
            by_endpoints[c.tail.component] -= c.sign
            by_endpoints[c.head.component] += c.sign
    if by_lk != by_endpoints:
        raise AssertionError(f"lambda mismatch: {by_lk} vs {by_endpoints}")
    return by_lk


def parity_vector(d: ChordDiagram) -> list[int]:
    """Number of nonself-chord endpoints on each component, mod 2."""
    counts = [0] * d.n_components
    for c in d.chords:
        if not c.is_self:
            counts[c.tail.component] += 1
            counts[c.head.component] += 1
    return [k % 2 for k in counts]


def _require_knot(d: ChordDiagram) -> None:
    if d.n_components != 1:
        raise ValueError(f"defined for knots only; diagram has {d.n_components} components")


def chord_indices(d: ChordDiagram) -> dict[str, int]:
    """Index of every chord of a knot diagram.

    Uses prefix sums of endpoint signs: the index is the sum over the open arc
    running forward from the tail to the head.
    """
    _require_knot(d)
    word = d.words[0]
    prefix = [0]
    for s in word:
        prefix.append(prefix[-1] + d.endpoint_sign(s))
    total = prefix[-1]
    out = {}
    for c in d.chords:
        t, h = c.tail.position, c.head.position
        if t < h:
            out[c.id] = prefix[h] - prefix[t + 1]
        else:
            out[c.id] = (total - prefix[t + 1]) + prefix[h]
    return out


def chord_index(d: ChordDiagram, chord: str) -> int:
    if chord not in d.chord_map:
        _require_knot(d)
        raise KeyError(f"unknown chord {chord!r}")
    return chord_indices(d)[chord]


def writhe_spectrum(d: ChordDiagram) -> WritheSpectrum:
    values: dict[int, int] = {}
    for cid, ind in chord_indices(d).items():
        if ind != 0:
            values[ind] = values.get(ind, 0) + d.chord_map[cid].sign
    return WritheSpectrum(values)


def invariant_report(d: ChordDiagram) -> dict:
    """All invariants as plain integers; spectrum entries are ``None`` for links."""
    report: dict = {
        "components": d.n_components,
        "linking_matrix": linking_matrix(d),
        "lambda": lambda_vector(d),
        "parity": parity_vector(d),
    }
    if d.n_components == 1:
        sp = writhe_spectrum(d)
        report["spectrum"] = {str(n): v for n, v in sp.values.items()}
        report["odd_writhe"] = sp.odd_writhe
    else:
        report["spectrum"] = None
        report["odd_writhe"] = None
    return report
