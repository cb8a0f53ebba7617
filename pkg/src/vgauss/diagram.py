"""Gauss diagrams of oriented virtual links.

A diagram is a tuple of oriented circles.  Each circle carries a cyclic
sequence of chord endpoints; a chord joins the overcrossing (its tail) to
the undercrossing (its head) of one real crossing and carries a sign.

Text format (GDF)::

    O1+ O2+ U1+ U2+          # one component, virtual trefoil
    O1+ O2+ ; U1+ U2+        # two components

A file whose first line is ``%long`` holds a long (linear) template.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence

__all__ = [
    "Slot",
    "EndpointRef",
    "Chord",
    "ChordDiagram",
    "LongTemplate",
    "GDFError",
    "DiagramError",
    "parse_gdf",
    "serialize_gdf",
    "parse_long_template",
    "serialize_long_template",
    "read_gdf",
    "validate",
    "canonicalize",
    "close_product",
    "relabel",
    "rotate",
    "remove_chords",
    "random_diagram",
]


class Slot(NamedTuple):
    """One endpoint in a component word: the chord id and whether it is the tail."""

    chord: str
    tail: bool


@dataclass(frozen=True, order=True)
class EndpointRef:
    component: int
    position: int


@dataclass(frozen=True)
class Chord:
    id: str
    sign: int
    tail: EndpointRef
    head: EndpointRef

    @property
    def is_self(self) -> bool:
        return self.tail.component == self.head.component


class GDFError(ValueError):
    """Malformed GDF text.  ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)


class DiagramError(ValueError):
    """A diagram violates its structural invariants."""


@dataclass(frozen=True)
class ChordDiagram:
    """Immutable Gauss diagram.

    ``sizes[i]`` is the number of endpoint slots on component ``i``; every
    slot is occupied by exactly one endpoint of one chord.  Build instances
    with :meth:`from_words` or :func:`parse_gdf`; the raw constructor does not
    check anything so that :func:`validate` can report on broken values.
    """

    sizes: tuple[int, ...]
    chords: tuple[Chord, ...]

    @classmethod
    def from_words(
        cls, words: Sequence[Sequence[Slot | tuple[str, bool]]], signs: Mapping[str, int]
    ) -> ChordDiagram:
        tails: dict[str, EndpointRef] = {}
        heads: dict[str, EndpointRef] = {}
        order: list[str] = []
        for ci, word in enumerate(words):
            for pos, (label, is_tail) in enumerate(word):
                table = tails if is_tail else heads
                if label in table:
                    role = "tail" if is_tail else "head"
                    raise DiagramError(f"chord {label!r} has two {role}s")
                table[label] = EndpointRef(ci, pos)
                if label not in order:
                    order.append(label)
        chords = []
        for label in order:
            if label not in tails or label not in heads:
                raise DiagramError(f"chord {label!r} has a single endpoint")
            if label not in signs:
                raise DiagramError(f"chord {label!r} has no sign")
            sign = signs[label]
            if sign not in (1, -1):
                raise DiagramError(f"chord {label!r} has sign {sign!r}")
            chords.append(Chord(label, sign, tails[label], heads[label]))
        return cls(tuple(len(w) for w in words), tuple(chords))

    @classmethod
    def empty(cls, components: int = 1) -> ChordDiagram:
        return cls((0,) * components, ())

    @property
    def n_components(self) -> int:
        return len(self.sizes)

    @cached_property
    def chord_map(self) -> dict[str, Chord]:
        return {c.id: c for c in self.chords}

    @cached_property
    def signs(self) -> dict[str, int]:
        return {c.id: c.sign for c in self.chords}

    @cached_property
    def words(self) -> tuple[tuple[Slot, ...], ...]:
        """Per-component endpoint sequences, in cyclic order from position 0."""
        grid: list[list[Slot | None]] = [[None] * n for n in self.sizes]
        for c in self.chords:
            grid[c.tail.component][c.tail.position] = Slot(c.id, True)
            grid[c.head.component][c.head.position] = Slot(c.id, False)
        for row in grid:
            if any(s is None for s in row):
                raise DiagramError("diagram has unoccupied slots; run validate()")
        return tuple(tuple(row) for row in grid)  # type: ignore[arg-type]

    def endpoint_sign(self, slot: Slot) -> int:
        """Endpoint sign: ``-sign`` at a tail, ``+sign`` at a head."""
        s = self.chord_map[slot.chord].sign
        return -s if slot.tail else s

    def __len__(self) -> int:
        return len(self.chords)

    def __str__(self) -> str:
        return serialize_gdf(self)


@dataclass(frozen=True)
class LongTemplate:
    """A linear endpoint sequence whose chords all close up inside it."""

    word: tuple[Slot, ...]
    signs: Mapping[str, int]

    def __post_init__(self):
        ChordDiagram.from_words([self.word], self.signs)

    @property
    def chord_ids(self) -> list[str]:
        seen: list[str] = []
        for s in self.word:
            if s.chord not in seen:
                seen.append(s.chord)
        return seen

    def closure(self) -> ChordDiagram:
        return ChordDiagram.from_words([self.word], self.signs)


# --- text format -----------------------------------------------------------

_TOKEN = re.compile(r"([OU])([0-9A-Za-z_]+)([+-])")


def _tokenize(text: str) -> list[list[tuple[str, str, str, int, int]]]:
    components: list[list[tuple[str, str, str, int, int]]] = [[]]
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        col = 0
        while col < len(line):
            ch = line[col]
            if ch.isspace():
                col += 1
                continue
            if ch == ";":
                components.append([])
                col += 1
                continue
            m = _TOKEN.match(line, col)
            end = m.end() if m else col
            if m is None or (end < len(line) and not (line[end].isspace() or line[end] == ";")):
                bad = line[col:].split()[0]
                raise GDFError(f"bad token {bad!r}", lineno, col + 1)
            components[-1].append((m.group(1), m.group(2), m.group(3), lineno, col + 1))
            col = end
    return components


def parse_gdf(text: str) -> ChordDiagram:
    """Parse GDF text into a validated diagram.

    >>> parse_gdf("O1+ U1+").signs
    {'1': 1}
    """
    lines = text.lstrip().splitlines()
    if lines and lines[0].strip() == "%long":
        raise GDFError("text is a long template; use parse_long_template", 1, 1)
    comps = _tokenize(text)
    seen: dict[str, tuple[str, str, int, int]] = {}
    counts: dict[str, int] = {}
    for comp in comps:
        for role, label, sign, ln, col in comp:
            counts[label] = counts.get(label, 0) + 1
            if counts[label] > 2:
                raise GDFError(f"label {label!r} appears more than twice", ln, col)
            if label in seen:
                prole, psign, _, _ = seen[label]
                if prole == role:
                    raise GDFError(f"label {label!r} has two {role} tokens", ln, col)
                if psign != sign:
                    raise GDFError(f"sign mismatch for label {label!r}", ln, col)
            else:
                seen[label] = (role, sign, ln, col)
    for label, n in counts.items():
        if n != 2:
            _, _, ln, col = seen[label]
            raise GDFError(f"label {label!r} appears once", ln, col)
    words = [[Slot(label, role == "O") for role, label, _, _, _ in comp] for comp in comps]
    signs = {label: (1 if v[1] == "+" else -1) for label, v in seen.items()}
    return ChordDiagram.from_words(words, signs)


def _token(slot: Slot, sign: int, label: str | None = None) -> str:
    return f"{'O' if slot.tail else 'U'}{label or slot.chord}{'+' if sign > 0 else '-'}"


def serialize_gdf(d: ChordDiagram) -> str:
    """Deterministic GDF text; components are joined with ``" ; "``."""
    return " ; ".join(
        " ".join(_token(s, d.chord_map[s.chord].sign) for s in word) for word in d.words
    )


def parse_long_template(text: str) -> LongTemplate:
    lines = text.splitlines()
    idx = next((i for i, ln in enumerate(lines) if ln.split("#", 1)[0].strip()), None)
    if idx is None or lines[idx].strip() != "%long":
        raise GDFError("missing %long header", 1, 1)
    body = "\n".join(lines[idx + 1:])
    if any(";" in ln.split("#", 1)[0] for ln in lines[idx + 1:]):
        raise GDFError("a long template has a single component")
    d = parse_gdf(body)
    return LongTemplate(d.words[0], d.signs)


def serialize_long_template(t: LongTemplate) -> str:
    body = " ".join(_token(s, t.signs[s.chord]) for s in t.word)
    return f"%long\n{body}\n"


def read_gdf(text: str) -> ChordDiagram:
    """Parse either a closed diagram or a long template (read as its closure)."""
    head = text.lstrip().splitlines()[:1]
    if head and head[0].strip() == "%long":
        return parse_long_template(text).closure()
    return parse_gdf(text)


# --- validation ------------------------------------------------------------


def validate(d: ChordDiagram) -> list[str]:
    """List every structural violation; an empty list means ``d`` is well formed."""
    problems = []
    if not d.sizes:
        problems.append("no components")
    occupied: dict[EndpointRef, str] = {}
    ids = set()
    for c in d.chords:
        if c.id in ids:
            problems.append(f"duplicate chord id {c.id!r}")
        ids.add(c.id)
        if not re.fullmatch(r"[0-9A-Za-z_]+", c.id):
            problems.append(f"bad label {c.id!r}")
        if c.sign not in (1, -1):
            problems.append(f"chord {c.id!r}: bad sign {c.sign!r}")
        if c.tail == c.head:
            problems.append(f"chord {c.id!r}: duplicate slot {c.tail}")
        for ref in (c.tail, c.head):
            if not (0 <= ref.component < len(d.sizes)) or not (0 <= ref.position < d.sizes[ref.component]):
                problems.append(f"chord {c.id!r}: bad reference {ref}")
                continue
            if ref in occupied and occupied[ref] != c.id:
                problems.append(f"chord {c.id!r}: duplicate slot {ref} (shared with {occupied[ref]!r})")
            occupied[ref] = c.id
    if sum(d.sizes) != 2 * len(d.chords):
        problems.append(f"endpoint count {sum(d.sizes)} != 2 x {len(d.chords)} chords")
    for ci, n in enumerate(d.sizes):
        for p in range(n):
            if EndpointRef(ci, p) not in occupied:
                problems.append(f"empty slot {EndpointRef(ci, p)}")
    return problems


# --- canonical form --------------------------------------------------------


def _encode(word: Sequence[Slot], start: int, signs: Mapping[str, int], numbering: dict[str, int]):
    numbering = dict(numbering)
    out = []
    n = len(word)
    for k in range(n):
        s = word[(start + k) % n]
        if s.chord not in numbering:
            numbering[s.chord] = len(numbering) + 1
        out.append((0 if s.tail else 1, numbering[s.chord], 0 if signs[s.chord] > 0 else 1))
    return tuple(out), numbering


def canonicalize(d: ChordDiagram) -> str:
    """Text key equal for diagrams that differ by relabeling and per-component rotation.

    Among all rotations, the one whose renumbered token tuples are
    lexicographically least is chosen, component by component; ties are
    carried forward since they number the later components differently.
    """
    signs = d.signs
    beam: list[tuple[tuple, dict[str, int]]] = [((), {})]
    for word in d.words:
        candidates = []
        for prefix, numbering in beam:
            starts = range(len(word)) if word else [0]
            for start in starts:
                enc, num = _encode(word, start, signs, numbering)
                candidates.append((prefix + (enc,), num))
        best = min(c[0] for c in candidates)
        beam = []
        seen = set()
        for key, num in candidates:
            if key == best:
                tag = tuple(sorted(num.items()))
                if tag not in seen:
                    seen.add(tag)
                    beam.append((key, num))
    key = beam[0][0]
    return " ; ".join(
        " ".join(f"{'OU'[r]}{k}{'+-'[s]}" for r, k, s in comp) for comp in key
    )


# --- constructions ---------------------------------------------------------


def close_product(t: LongTemplate, m: int) -> ChordDiagram:
    """Close up ``m`` concatenated copies of ``t``; copy ``k`` relabels ``x`` as ``x_k``."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    word = []
    signs = {}
    for k in range(1, m + 1):
        for s in t.word:
            label = f"{s.chord}_{k}"
            word.append(Slot(label, s.tail))
            signs[label] = t.signs[s.chord]
    return ChordDiagram.from_words([word], signs)


def relabel(d: ChordDiagram, mapping: Mapping[str, str]) -> ChordDiagram:
    words = [[Slot(mapping.get(s.chord, s.chord), s.tail) for s in w] for w in d.words]
    signs = {mapping.get(k, k): v for k, v in d.signs.items()}
    if len(signs) != len(d.signs):
        raise DiagramError("relabeling merges chords")
    return ChordDiagram.from_words(words, signs)


def rotate(d: ChordDiagram, shifts: Sequence[int]) -> ChordDiagram:
    """Rotate component ``i`` so that its old position ``shifts[i]`` comes first."""
    words = []
    for w, k in zip(d.words, shifts):
        k = k % len(w) if w else 0
        words.append(w[k:] + w[:k])
    return ChordDiagram.from_words(words, d.signs)


def remove_chords(d: ChordDiagram, ids: Iterable[str]) -> ChordDiagram:
    drop = set(ids)
    missing = drop - set(d.chord_map)
    if missing:
        raise KeyError(f"unknown chords: {sorted(missing)}")
    words = [[s for s in w if s.chord not in drop] for w in d.words]
    return ChordDiagram.from_words(words, {k: v for k, v in d.signs.items() if k not in drop})


def random_diagram(
    rng: random.Random, n_chords: int, n_components: int = 1, self_chords: bool = True
) -> ChordDiagram:
    """Uniformly scatter ``n_chords`` random signed chords over ``n_components`` circles.

    With ``self_chords=False`` every chord joins two distinct components
    (requires ``n_components >= 2``).
    """
    words: list[list[Slot]] = [[] for _ in range(n_components)]
    signs = {}
    for k in range(1, n_chords + 1):
        label = str(k)
        signs[label] = rng.choice((1, -1))
        if self_chords:
            a, b = rng.randrange(n_components), rng.randrange(n_components)
        else:
            a, b = rng.sample(range(n_components), 2)
        for comp, is_tail in ((a, True), (b, False)):
            w = words[comp]
            w.insert(rng.randint(0, len(w)), Slot(label, is_tail))
    return ChordDiagram.from_words(words, signs)
