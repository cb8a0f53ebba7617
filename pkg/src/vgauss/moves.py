"""Local rewrites of Gauss diagrams.

Every move acts on a few chords whose endpoints sit on short *arcs*: runs of
two cyclically adjacent slots on one component.  Deletion-type moves are
found by pattern matching; insertion-type moves place arcs into *gaps*
(the position before slot ``p`` of a component).

Move catalogue:

* ``r1``  one chord whose two endpoints are adjacent.
* ``r2``  two chords of opposite sign with adjacent tails and adjacent heads.
* ``r3``  three chords x: T->M, y: T->B, z: M->B on arcs T, M, B; the move
  reverses each arc.  Only the orderings realizable by three straight lines
  are accepted (see :func:`r3_realizable`).
* ``cc``  crossing change: negate a chord and swap its ends.
* ``f1``..``f6``  swap two adjacent tails (f1 ++, f2 --, f3 mixed) or two
  adjacent heads (f4 ++, f5 --, f6 mixed).
* ``fd1``..``fd4``  swap an adjacent tail and head; numbered by the signs of
  the chords owning the tail and the head: (+,+), (+,-), (-,+), (-,-).
* ``vdc1``..``vdc4``  three equal-sign chords x: A->B, y: B->C, z: C->A with
  each arc holding one tail and one head.  Arcs are either all tail-first or
  all head-first.  vdc1 tail-first +, vdc2 tail-first -, vdc3 head-first +,
  vdc4 head-first -.
* ``vp1``..``vp4``  four chords x_ij from arc P_i to arc Q_j forming two
  antiparallel bands crossing each other; see :data:`VP_CLASSES`.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

from .diagram import ChordDiagram, EndpointRef, Slot, canonicalize, remove_chords

__all__ = [
    "MoveKind",
    "Direction",
    "Move",
    "MoveSite",
    "StaleSiteError",
    "VP_CLASSES",
    "parse_moves",
    "r3_realizable",
    "enumerate_sites",
    "iter_sites",
    "sample_site",
    "apply_move",
    "find_inverse",
    "crossing_change",
    "greedy_simplify",
]


class MoveKind(Enum):
    R1 = "r1"
    R2 = "r2"
    R3 = "r3"
    CC = "cc"
    F1 = "f1"
    F2 = "f2"
    F3 = "f3"
    F4 = "f4"
    F5 = "f5"
    F6 = "f6"
    FD1 = "fd1"
    FD2 = "fd2"
    FD3 = "fd3"
    FD4 = "fd4"
    VDC1 = "vdc1"
    VDC2 = "vdc2"
    VDC3 = "vdc3"
    VDC4 = "vdc4"
    VP1 = "vp1"
    VP2 = "vp2"
    VP3 = "vp3"
    VP4 = "vp4"

    @property
    def directional(self) -> bool:
        return self in _DIRECTIONAL

    @property
    def family(self) -> str:
        return self.value.rstrip("0123456789")


_DIRECTIONAL = {MoveKind.R1, MoveKind.R2} | {
    k for k in MoveKind if k.value.startswith(("vdc", "vp"))
}


class Direction(Enum):
    INS = "ins"
    DEL = "del"


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    direction: Direction | None = None

    def __post_init__(self):
        if self.kind.directional != (self.direction is not None):
            raise ValueError(f"{self.kind.value}: direction {'required' if self.kind.directional else 'not allowed'}")

    @property
    def inverse(self) -> Move:
        if self.direction is None:
            return self
        flip = Direction.DEL if self.direction is Direction.INS else Direction.INS
        return Move(self.kind, flip)

    def __str__(self) -> str:
        return self.kind.value if self.direction is None else f"{self.kind.value}:{self.direction.value}"


def parse_moves(text: str) -> list[Move]:
    """Parse a comma-separated list of move names.

    Accepts exact names (``vdc1:del``), families without a number
    (``vdc:ins`` means vdc1..vdc4) and directional names without a suffix
    (``r1`` means both directions).

    >>> [str(m) for m in parse_moves("r1:del,cc")]
    ['r1:del', 'cc']
    """
    out: list[Move] = []
    for item in filter(None, (t.strip().lower() for t in text.split(","))):
        name, _, suffix = item.partition(":")
        kinds = [k for k in MoveKind if k.value == name] or [k for k in MoveKind if k.family == name]
        if not kinds:
            raise ValueError(f"unknown move {item!r}")
        for k in kinds:
            if not k.directional:
                if suffix:
                    raise ValueError(f"move {k.value!r} has no direction")
                out.append(Move(k))
            elif suffix:
                try:
                    out.append(Move(k, Direction(suffix)))
                except ValueError:
                    raise ValueError(f"bad direction in {item!r}") from None
            else:
                out.extend(Move(k, d) for d in Direction)
    return list(dict.fromkeys(out))


Token = tuple[int, bool]


@dataclass(frozen=True)
class MoveSite:
    """A concrete application of a move.

    ``chords`` names the matched chords.  ``slots`` holds the first slot of
    each arc that the move rearranges (r3, f, fd).  Insertions carry
    ``placements``: pairs of a gap and the tokens ``(new chord, is_tail)``
    placed there in order; ``new_signs[k]`` is the sign of new chord ``k``.
    """

    move: Move
    chords: tuple[str, ...] = ()
    slots: tuple[EndpointRef, ...] = ()
    placements: tuple[tuple[EndpointRef, tuple[Token, ...]], ...] = ()
    new_signs: tuple[int, ...] = ()

    @property
    def kind(self) -> MoveKind:
        return self.move.kind

    def __str__(self) -> str:
        parts = [str(self.move)]
        if self.chords:
            parts.append(" ".join(self.chords))
        if self.slots:
            parts.append("at " + " ".join(f"{r.component}:{r.position}" for r in self.slots))
        for gap, toks in self.placements:
            body = " ".join(f"{'O' if t else 'U'}{'abcd'[k]}" for k, t in toks)
            parts.append(f"@{gap.component}:{gap.position}[{body}]")
        if self.new_signs:
            parts.append("signs " + "".join("+" if s > 0 else "-" for s in self.new_signs))
        return " ".join(parts)


class StaleSiteError(ValueError):
    """The site does not match the diagram it is applied to."""


# --- adjacency helpers -----------------------------------------------------


def _next(d: ChordDiagram, r: EndpointRef) -> EndpointRef:
    return EndpointRef(r.component, (r.position + 1) % d.sizes[r.component])


def _prev(d: ChordDiagram, r: EndpointRef) -> EndpointRef:
    return EndpointRef(r.component, (r.position - 1) % d.sizes[r.component])


def _at(d: ChordDiagram, r: EndpointRef) -> Slot:
    return d.words[r.component][r.position]


def _arcs(d: ChordDiagram) -> Iterator[tuple[EndpointRef, EndpointRef]]:
    """Ordered pairs (first, second) of distinct cyclically adjacent slots."""
    for ci, n in enumerate(d.sizes):
        if n < 2:
            continue
        for p in range(n):
            yield EndpointRef(ci, p), EndpointRef(ci, (p + 1) % n)


def _gaps(d: ChordDiagram, max_gaps: int | None = None) -> list[EndpointRef]:
    gaps = []
    for ci, n in enumerate(d.sizes):
        gaps.extend(EndpointRef(ci, p) for p in range(max(n, 1)))
    return gaps if max_gaps is None else gaps[:max_gaps]


def r3_realizable(order_bits: tuple[int, int, int], signs: tuple[int, int, int]) -> bool:
    """Whether an r3 triangle can be drawn with three straight strands.

    ``signs`` are those of x (T->M), y (T->B), z (M->B).  ``order_bits`` say,
    per arc T, M, B, whether the later-listed strand is met first: T meets
    B first, M meets B first, B meets M first.
    """
    b0, b1, b2 = order_bits
    sx, sy, sz = signs
    return sx * sy == (-1) ** (b1 + b2) and sx * sz == (-1) ** (b0 + b2)


# --- pattern tables for insertions ------------------------------------------

T, H = True, False

_VDC_VARIANTS = {
    MoveKind.VDC1: (True, 1),
    MoveKind.VDC2: (True, -1),
    MoveKind.VDC3: (False, 1),
    MoveKind.VDC4: (False, -1),
}

# vp classes.  Chord x_ij runs from arc P_i to arc Q_j; sigma_i = +1 when
# x_i1 comes first on P_i and tau_j = +1 when x_1j comes first on Q_j.  Both
# bands are antiparallel (sigma2 = -sigma1, tau2 = -tau1) and
# sign(x_ij) = c * sigma_i * tau_j.  Swapping the two rows or the two columns
# flips sigma1, tau1 and c together, so each class has one labeling with
# c = +1; the table lists its (sigma1, tau1).
VP_CLASSES = {
    MoveKind.VP1: (1, 1),
    MoveKind.VP2: (1, -1),
    MoveKind.VP3: (-1, 1),
    MoveKind.VP4: (-1, -1),
}
_VP_BY_CLASS = {v: k for k, v in VP_CLASSES.items()}


def _insertion_variants(kind: MoveKind) -> list[tuple[tuple[tuple[Token, ...], ...], tuple[int, ...]]]:
    """(arcs in gap order, signs of new chords) for every insertion variant."""
    if kind is MoveKind.R1:
        return [((((0, a), (0, not a)),), (s,)) for a in (T, H) for s in (1, -1)]
    if kind is MoveKind.R2:
        out = []
        for tails in (((0, T), (1, T)), ((1, T), (0, T))):
            for heads in (((0, H), (1, H)), ((1, H), (0, H))):
                out.append(((tails, heads), (1, -1)))
                out.append(((heads, tails), (1, -1)))
        return out
    if kind in _VDC_VARIANTS:
        tail_first, sign = _VDC_VARIANTS[kind]
        # x = 0: A->B, y = 1: B->C, z = 2: C->A
        a, b, c = ((0, T), (2, H)), ((1, T), (0, H)), ((2, T), (1, H))
        if not tail_first:
            a, b, c = a[::-1], b[::-1], c[::-1]
        return [((a, b, c), (sign,) * 3), ((a, c, b), (sign,) * 3)]
    if kind in VP_CLASSES:
        sigma1, tau1 = VP_CLASSES[kind]
        # x11 = 0, x12 = 1, x21 = 2, x22 = 3
        p1 = ((0, T), (1, T)) if sigma1 > 0 else ((1, T), (0, T))
        p2 = ((2, T), (3, T)) if sigma1 < 0 else ((3, T), (2, T))
        q1 = ((0, H), (2, H)) if tau1 > 0 else ((2, H), (0, H))
        q2 = ((1, H), (3, H)) if tau1 < 0 else ((3, H), (1, H))
        e = sigma1 * tau1
        signs = (e, -e, -e, e)
        return [(perm, signs) for perm in itertools.permutations((p1, p2, q1, q2))]
    raise ValueError(f"{kind.value} has no insertion form")


# --- enumeration -----------------------------------------------------------


def _r1_del(d):
    for c in d.chords:
        if c.is_self and d.sizes[c.tail.component] >= 2:
            if _next(d, c.tail) == c.head or _next(d, c.head) == c.tail:
                yield MoveSite(Move(MoveKind.R1, Direction.DEL), (c.id,))


def _r2_del(d):
    seen = set()
    cm = d.chord_map
    for a, b in _arcs(d):
        u, v = _at(d, a), _at(d, b)
        if not (u.tail and v.tail) or u.chord == v.chord:
            continue
        cu, cv = cm[u.chord], cm[v.chord]
        if cu.sign == cv.sign:
            continue
        hu, hv = cu.head, cv.head
        if hu.component != hv.component or hu == hv or d.sizes[hu.component] < 2:
            continue
        if _next(d, hu) == hv or _next(d, hv) == hu:
            key = frozenset((u.chord, v.chord))
            if key not in seen:
                seen.add(key)
                yield MoveSite(Move(MoveKind.R2, Direction.DEL), (u.chord, v.chord))


def _r3(d):
    cm = d.chord_map
    seen = set()
    for a, b in _arcs(d):
        p, q = _at(d, a), _at(d, b)
        if not (p.tail and q.tail) or p.chord == q.chord:
            continue
        for x, y in ((p.chord, q.chord), (q.chord, p.chord)):
            b0 = 1 if y == p.chord else 0
            hx, hy = cm[x].head, cm[y].head
            for near in {_next(d, hx), _prev(d, hx)}:
                zs = _at(d, near)
                if not zs.tail or zs.chord in (x, y):
                    continue
                z = zs.chord
                tz, hz = cm[z].tail, cm[z].head
                m_arcs = [(hx, 0)] if _next(d, hx) == tz else []
                if _next(d, tz) == hx:
                    m_arcs.append((tz, 1))
                b_arcs = [(hy, 0)] if _next(d, hy) == hz else []
                if _next(d, hz) == hy:
                    b_arcs.append((hz, 1))
                signs = (cm[x].sign, cm[y].sign, cm[z].sign)
                for m_first, b1 in m_arcs:
                    for b_first, b2 in b_arcs:
                        if r3_realizable((b0, b1, b2), signs):
                            site = MoveSite(Move(MoveKind.R3), (x, y, z), (a, m_first, b_first))
                            if site not in seen:
                                seen.add(site)
                                yield site


def _swaps(d, kinds):
    cm = d.chord_map
    seen = set()
    for a, b in _arcs(d):
        u, v = _at(d, a), _at(d, b)
        if u.chord == v.chord or frozenset((a, b)) in seen:
            continue
        su, sv = cm[u.chord].sign, cm[v.chord].sign
        if u.tail == v.tail:
            group = 0 if u.tail else 3
            kind = [MoveKind.F1, MoveKind.F2, MoveKind.F3, MoveKind.F4, MoveKind.F5, MoveKind.F6][
                group + (0 if su == sv == 1 else 1 if su == sv == -1 else 2)
            ]
        else:
            st, sh = (su, sv) if u.tail else (sv, su)
            kind = {(1, 1): MoveKind.FD1, (1, -1): MoveKind.FD2, (-1, 1): MoveKind.FD3, (-1, -1): MoveKind.FD4}[(st, sh)]
        if kind in kinds:
            seen.add(frozenset((a, b)))
            yield MoveSite(Move(kind), (u.chord, v.chord), (a,))


def _vdc_del(d, kind):
    tail_first, sign = _VDC_VARIANTS[kind]
    cm = d.chord_map
    seen = set()
    for cx in d.chords:
        if cx.sign != sign:
            continue
        if tail_first:
            zs, ys = _at(d, _next(d, cx.tail)), _at(d, _prev(d, cx.head))
            if zs.tail or not ys.tail:
                continue
        else:
            zs, ys = _at(d, _prev(d, cx.tail)), _at(d, _next(d, cx.head))
            if zs.tail or not ys.tail:
                continue
        x, y, z = cx.id, ys.chord, zs.chord
        if len({x, y, z}) < 3 or cm[y].sign != sign or cm[z].sign != sign:
            continue
        if tail_first:
            ok = _next(d, cm[z].tail) == cm[y].head
        else:
            ok = _next(d, cm[y].head) == cm[z].tail
        key = frozenset((x, y, z))
        if ok and key not in seen:
            seen.add(key)
            yield MoveSite(Move(kind, Direction.DEL), (x, y, z))


def _vp_del(d, kind):
    cm = d.chord_map
    p_arcs = [(_at(d, a).chord, _at(d, b).chord) for a, b in _arcs(d) if _at(d, a).tail and _at(d, b).tail]
    p_arcs = [pa for pa in p_arcs if pa[0] != pa[1]]
    seen = set()

    def first(u, v):  # head of u immediately followed by head of v
        hu, hv = cm[u].head, cm[v].head
        return hu.component == hv.component and hu != hv and _next(d, hu) == hv

    for (f1, s1), (f2, s2) in itertools.permutations(p_arcs, 2):
        if len({f1, s1, f2, s2}) < 4:
            continue
        for sigma1, tau1 in itertools.product((1, -1), repeat=2):
            x11, x12 = (f1, s1) if sigma1 > 0 else (s1, f1)
            x21, x22 = (s2, f2) if sigma1 > 0 else (f2, s2)
            q1 = first(x11, x21) if tau1 > 0 else first(x21, x11)
            q2 = first(x22, x12) if tau1 > 0 else first(x12, x22)
            if not (q1 and q2):
                continue
            c = cm[x11].sign * sigma1 * tau1
            e = c * sigma1 * tau1
            if (cm[x12].sign, cm[x21].sign, cm[x22].sign) != (-e, -e, e):
                continue
            if _VP_BY_CLASS[(sigma1 * c, tau1 * c)] is not kind:
                continue
            key = frozenset((x11, x12, x21, x22))
            if key not in seen:
                seen.add(key)
                yield MoveSite(Move(kind, Direction.DEL), (x11, x12, x21, x22))


def _insertions(d, move, gaps):
    variants = _insertion_variants(move.kind)
    k = len(variants[0][0])
    for combo in itertools.combinations_with_replacement(range(len(gaps)), k):
        for arcs, signs in variants:
            yield MoveSite(move, placements=tuple((gaps[i], arc) for i, arc in zip(combo, arcs)), new_signs=signs)


def iter_sites(
    d: ChordDiagram, move: Move, max_gaps: int | None = None, gaps: Sequence[EndpointRef] | None = None
) -> Iterator[MoveSite]:
    """Lazily yield the sites of ``move`` in ``d``.

    Insertions range over ``gaps`` if given, else over the first
    ``max_gaps`` gaps (all gaps by default); gaps may repeat.
    """
    kind = move.kind
    if move.direction is Direction.INS:
        yield from _insertions(d, move, list(gaps) if gaps is not None else _gaps(d, max_gaps))
    elif kind is MoveKind.R1:
        yield from _r1_del(d)
    elif kind is MoveKind.R2:
        yield from _r2_del(d)
    elif kind is MoveKind.R3:
        yield from _r3(d)
    elif kind is MoveKind.CC:
        for c in d.chords:
            yield MoveSite(move, (c.id,))
    elif kind.family in ("f", "fd"):
        yield from _swaps(d, {kind})
    elif kind in _VDC_VARIANTS:
        yield from _vdc_del(d, kind)
    else:
        yield from _vp_del(d, kind)


def enumerate_sites(d: ChordDiagram, move: Move, max_gaps: int | None = None) -> list[MoveSite]:
    return list(iter_sites(d, move, max_gaps))


def sample_site(d: ChordDiagram, move: Move, rng: random.Random) -> MoveSite | None:
    """One random site; insertions are drawn without building the full list."""
    if move.direction is Direction.INS:
        gaps = _gaps(d)
        variants = _insertion_variants(move.kind)
        arcs, signs = rng.choice(variants)
        picks = sorted(rng.randrange(len(gaps)) for _ in arcs)
        return MoveSite(move, placements=tuple((gaps[i], arc) for i, arc in zip(picks, arcs)), new_signs=signs)
    sites = enumerate_sites(d, move)
    return rng.choice(sites) if sites else None


# --- application -----------------------------------------------------------


def _fresh_labels(d: ChordDiagram, k: int) -> list[str]:
    used = set(d.chord_map)
    out = []
    n = 1
    while len(out) < k:
        if str(n) not in used:
            out.append(str(n))
        n += 1
    return out


def _insert(d: ChordDiagram, site: MoveSite) -> ChordDiagram:
    labels = _fresh_labels(d, len(site.new_signs))
    pending: dict[tuple[int, int], list[Slot]] = {}
    for gap, toks in site.placements:
        if not (0 <= gap.component < d.n_components) or not (0 <= gap.position <= d.sizes[gap.component]):
            raise StaleSiteError(f"gap {gap} out of range")
        pending.setdefault((gap.component, gap.position), []).extend(Slot(labels[k], t) for k, t in toks)
    words = []
    for ci, word in enumerate(d.words):
        new: list[Slot] = []
        for p in range(len(word) + 1):
            new.extend(pending.get((ci, p), ()))
            if p < len(word):
                new.append(word[p])
        words.append(new)
    signs = dict(d.signs)
    signs.update(zip(labels, site.new_signs))
    return ChordDiagram.from_words(words, signs)


def _swap(d: ChordDiagram, pairs: Sequence[tuple[EndpointRef, EndpointRef]]) -> ChordDiagram:
    words = [list(w) for w in d.words]
    for a, b in pairs:
        words[a.component][a.position], words[b.component][b.position] = (
            words[b.component][b.position],
            words[a.component][a.position],
        )
    return ChordDiagram.from_words(words, d.signs)


def crossing_change(d: ChordDiagram, chord: str) -> ChordDiagram:
    """Negate the sign of ``chord`` and swap its tail and head."""
    if chord not in d.chord_map:
        raise KeyError(f"unknown chord {chord!r}")
    words = [[Slot(s.chord, not s.tail) if s.chord == chord else s for s in w] for w in d.words]
    signs = dict(d.signs)
    signs[chord] = -signs[chord]
    return ChordDiagram.from_words(words, signs)


def apply_move(d: ChordDiagram, site: MoveSite, check: bool = True) -> ChordDiagram:
    """Apply ``site`` to ``d``.

    With ``check`` the site is first matched against ``d`` again and
    :class:`StaleSiteError` is raised if the pattern is gone.
    """
    move = site.move
    if move.direction is Direction.INS:
        if check:
            _check_insertion(site)
        return _insert(d, site)
    if check and site not in set(iter_sites(d, move)):
        raise StaleSiteError(f"site {site} does not match the diagram")
    kind = move.kind
    if kind is MoveKind.CC:
        return crossing_change(d, site.chords[0])
    if kind is MoveKind.R3 or kind.family in ("f", "fd"):
        return _swap(d, [(a, _next(d, a)) for a in site.slots])
    return remove_chords(d, site.chords)


def _check_insertion(site: MoveSite) -> None:
    count = {}
    for _, toks in site.placements:
        for k, t in toks:
            count.setdefault(k, []).append(t)
    if sorted(count) != list(range(len(site.new_signs))) or any(sorted(v) != [False, True] for v in count.values()):
        raise StaleSiteError(f"malformed insertion {site}")
    if any(s not in (1, -1) for s in site.new_signs):
        raise StaleSiteError(f"bad signs in {site}")


def find_inverse(before: ChordDiagram, site: MoveSite, after: ChordDiagram) -> MoveSite | None:
    """A site of the inverse move on ``after`` that restores ``before`` up to canonical key."""
    target = canonicalize(before)
    inverse = site.move.inverse
    if site.move.direction is Direction.INS:
        new = set(after.chord_map) - set(before.chord_map)
        candidates: Iterator[MoveSite] = (s for s in iter_sites(after, inverse) if set(s.chords) == new)
    elif site.move.direction is Direction.DEL:
        candidates = iter_sites(after, inverse, gaps=_deletion_gaps(before, set(site.chords)))
    else:
        candidates = iter_sites(after, inverse)
    for cand in candidates:
        if canonicalize(apply_move(after, cand, check=False)) == target:
            return cand
    return None


def _deletion_gaps(before: ChordDiagram, removed: set[str]) -> list[EndpointRef]:
    """Gaps in the reduced diagram where removed endpoints used to sit."""
    gaps = []
    for ci, word in enumerate(before.words):
        kept = 0
        sites = []
        for s in word:
            if s.chord in removed:
                sites.append(kept)
            else:
                kept += 1
        gaps.extend(EndpointRef(ci, p % kept if kept else 0) for p in sites)
    return list(dict.fromkeys(sorted(gaps)))


# --- simplification --------------------------------------------------------

_R_DEL = (Move(MoveKind.R1, Direction.DEL), Move(MoveKind.R2, Direction.DEL))


def _site_order(d: ChordDiagram, site: MoveSite) -> tuple:
    refs = []
    for cid in site.chords:
        c = d.chord_map[cid]
        refs.extend(((c.tail.component, c.tail.position), (c.head.component, c.head.position)))
    return tuple(sorted(refs))


def greedy_simplify(d: ChordDiagram) -> tuple[ChordDiagram, list[MoveSite]]:
    """Delete r1/r2 patterns until none remain.

    At each step the site whose endpoints come first (lowest component, then
    lowest position) is removed.  Reaching the empty diagram certifies a
    trivial knot or link; stopping early certifies nothing.
    """
    trace = []
    while True:
        sites = [s for m in _R_DEL for s in iter_sites(d, m)]
        if not sites:
            return d, trace
        best = min(sites, key=lambda s: _site_order(d, s))
        trace.append(best)
        d = remove_chords(d, best.chords)
