"""Parametrized knot families with known unknotting numbers.

Each family is a long template ``T_s``; ``K_s(m)`` closes up ``m`` copies.
Removing the designated ``b`` chords of one copy (one move of the family's
class) leaves a copy that simplifies away, so ``m`` moves unknot ``K_s(m)``,
while the writhe spectrum shows that ``m`` moves are needed.

======== ======= ============ ==============================================
family   s       move class   spectrum of K_s(m)
======== ======= ============ ==============================================
VDC      s >= 1  vdelta-circ  {2s: -2m, -4s: -m}
VS       s >= 3  vsharp       {2: 2ms, 1: m, -3: m, 1-2s: 2m}
VP       s >= 1  vpass        {2s: -m, 2s+2: 2m, 2s+4: -m}
INDEP_A  s >= 1  vdelta-circ  {2s-1: m, 1-2s: m}
INDEP_B  s >= 2  vpass        {1: m, 2s-1: m, 2s: -m}
======== ======= ============ ==============================================

The two INDEP families separate the bounds: there the odd-writhe bound is
sharp while the spectrum bound falls short.
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable

from .diagram import ChordDiagram, LongTemplate, Slot, close_product, parse_long_template, serialize_long_template
from .equivalence import MoveClass
from .invariants import WritheSpectrum

__all__ = [
    "FAMILY_IDS",
    "FamilySpec",
    "template",
    "load_template",
    "family_diagram",
    "expected_spectrum",
    "unknotting_script",
    "move_class",
    "fixture_name",
    "write_fixtures",
]


def _build(tokens: list[str], signs: dict[str, int]) -> LongTemplate:
    word = tuple(Slot(t[1:], t[0] == "O") for t in tokens)
    labels = dict.fromkeys(s.chord for s in word)
    return LongTemplate(word, {lab: signs.get(lab, signs.get(lab.rstrip("0123456789"), 1)) for lab in labels})


def _seq(role: str, prefix: str, lo: int, hi: int, reverse: bool = False) -> list[str]:
    r = range(hi, lo - 1, -1) if reverse else range(lo, hi + 1)
    return [f"{role}{prefix}{i}" for i in r]


def _vdc(s: int) -> LongTemplate:
    n = 2 * s
    toks = (
        ["Ub3", "Ob1"] + _seq("O", "c", 1, n) + _seq("O", "a", 1, n)
        + ["Ub1", "Ob2"] + _seq("U", "a", 1, n, True)
        + ["Ub2", "Ob3"] + _seq("U", "c", 1, n, True)
    )
    return _build(toks, {"a": 1, "c": 1, "b": -1})


def _vs(s: int) -> LongTemplate:
    n = 2 * s
    toks = (
        ["Oc1", "Ob3", "Ob4", "Ob1", "Uc1", "Ub1"] + _seq("O", "a", 1, n)
        + ["Ub4", "Oc2", "Ob2", "Ub3", "Ub2", "Uc2"] + _seq("U", "a", 1, n, True)
    )
    return _build(toks, {"a": 1, "b": 1, "c1": 1, "c2": -1})


def _vp(s: int) -> LongTemplate:
    n = 2 * s
    toks = (
        ["Ob1", "Ob2", "Oc1", "Oc2", "Ob3", "Ob4", "Uc2", "Uc1"] + _seq("U", "a", 1, n)
        + ["Ub4", "Ub1"] + _seq("O", "a", 1, n, True)
        + _seq("U", "d", 1, n + 2) + ["Ub2", "Ub3"] + _seq("O", "d", 1, n + 2, True)
    )
    return _build(toks, {"b1": -1, "b3": -1})


def _indep_a(s: int) -> LongTemplate:
    n = 2 * s - 1
    toks = (
        ["Ub3", "Ob1"] + _seq("U", "a", 1, n) + ["Ub1", "Ob2"] + _seq("O", "a", 1, n, True)
        + ["Ub2", "Ob3", "Oc1", "Oc2", "Uc2", "Uc1"]
    )
    return _build(toks, {})


def _indep_b(s: int) -> LongTemplate:
    n = 2 * s
    toks = (
        ["Ob1", "Ob2"] + _seq("U", "a", 1, n) + ["Oc", "Ob3", "Ob4", "Ub4", "Ub1", "Uc", "Ub2", "Ub3"]
        + _seq("O", "a", 1, n, True)
    )
    return _build(toks, {"b2": -1, "b4": -1})


@dataclass(frozen=True)
class _Family:
    min_s: int
    builder: Callable[[int], LongTemplate]
    spectrum: Callable[[int, int], dict[int, int]]
    removed: int
    move_class: MoveClass


_FAMILIES = {
    "VDC": _Family(1, _vdc, lambda s, m: {2 * s: -2 * m, -4 * s: -m}, 3, MoveClass.VDELTA_CIRC),
    "VS": _Family(3, _vs, lambda s, m: {2: 2 * m * s, 1: m, -3: m, 1 - 2 * s: 2 * m}, 4, MoveClass.VSHARP),
    "VP": _Family(1, _vp, lambda s, m: {2 * s: -m, 2 * s + 2: 2 * m, 2 * s + 4: -m}, 4, MoveClass.VPASS),
    "INDEP_A": _Family(1, _indep_a, lambda s, m: {2 * s - 1: m, 1 - 2 * s: m}, 3, MoveClass.VDELTA_CIRC),
    "INDEP_B": _Family(2, _indep_b, lambda s, m: {1: m, 2 * s - 1: m, 2 * s: -m}, 4, MoveClass.VPASS),
}

FAMILY_IDS = tuple(_FAMILIES)


@dataclass(frozen=True)
class FamilySpec:
    id: str
    s: int
    m: int = 1

    def __post_init__(self):
        object.__setattr__(self, "id", self.id.upper())
        fam = _FAMILIES.get(self.id)
        if fam is None:
            raise ValueError(f"unknown family {self.id!r}; expected one of {', '.join(FAMILY_IDS)}")
        if self.s < fam.min_s:
            raise ValueError(f"{self.id} needs s >= {fam.min_s}, got {self.s}")
        if self.m < 1:
            raise ValueError(f"need m >= 1, got {self.m}")


def template(family: str, s: int) -> LongTemplate:
    fs = FamilySpec(family, s)
    return _FAMILIES[fs.id].builder(s)


def fixture_name(family: str, s: int) -> str:
    return f"{family.lower()}_s{s}.gdf"


def load_template(family: str, s: int) -> LongTemplate:
    """Read the shipped fixture for ``(family, s)``, building it if none ships."""
    fs = FamilySpec(family, s)
    res = resources.files("vgauss") / "data" / fixture_name(fs.id, s)
    if res.is_file():
        return parse_long_template(res.read_text())
    return template(fs.id, s)


def family_diagram(f: FamilySpec) -> ChordDiagram:
    return close_product(load_template(f.id, f.s), f.m)


def expected_spectrum(f: FamilySpec) -> WritheSpectrum:
    return WritheSpectrum(_FAMILIES[f.id].spectrum(f.s, f.m))


def move_class(family: str) -> MoveClass:
    try:
        return _FAMILIES[family.upper()].move_class
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None


def unknotting_script(f: FamilySpec) -> list[tuple[str, ...]]:
    """One removal per copy: the chords ``b1..bk`` of that copy."""
    k = _FAMILIES[f.id].removed
    return [tuple(f"b{j}_{copy}" for j in range(1, k + 1)) for copy in range(1, f.m + 1)]


def write_fixtures(directory: str | Path, max_s: int = 4) -> list[Path]:
    """Write ``<id>_s<s>.gdf`` templates for every family with ``s <= max_s``."""
    out = []
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for fid, fam in _FAMILIES.items():
        for s in range(fam.min_s, max_s + 1):
            path = directory / fixture_name(fid, s)
            path.write_text(serialize_long_template(fam.builder(s)))
            out.append(path)
    return out
