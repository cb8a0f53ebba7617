"""Bounded shortest-path search between diagrams.

States are diagrams keyed by their canonical text.  Costed moves add one to
the path length, free moves add nothing.  By default every generated state
is first reduced with :func:`~vgauss.moves.greedy_simplify`.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .diagram import ChordDiagram, canonicalize, remove_chords
from .moves import Direction, Move, MoveKind, apply_move, greedy_simplify, iter_sites

__all__ = ["SearchBudget", "SearchResult", "bounded_distance", "search", "verify_script"]

_FREE_DEFAULT = frozenset({Move(MoveKind.R1, Direction.DEL), Move(MoveKind.R2, Direction.DEL)})


@dataclass(frozen=True)
class SearchBudget:
    costed: frozenset[Move]
    free: frozenset[Move] = _FREE_DEFAULT
    max_depth: int = 4
    max_states: int = 200_000
    max_gaps: int | None = None
    normalize: bool = True

    def __post_init__(self):
        object.__setattr__(self, "costed", frozenset(self.costed))
        object.__setattr__(self, "free", frozenset(self.free) - self.costed)


@dataclass
class SearchResult:
    distance: int | None
    states: int
    exhausted: bool = False
    path: list[Move] = field(default_factory=list)


def _key(d: ChordDiagram) -> str:
    return f"{d.n_components}|{canonicalize(d)}"


def search(a: ChordDiagram, b: ChordDiagram, budget: SearchBudget) -> SearchResult:
    """0-1 breadth-first search from ``a`` towards ``b``.

    ``exhausted`` is set when the state cap cut the search short; a distance
    found before that is still a valid upper bound.
    """
    norm = (lambda d: greedy_simplify(d)[0]) if budget.normalize else (lambda d: d)
    targets = {_key(b), _key(norm(b))}
    start = norm(a)
    if _key(a) in targets or _key(start) in targets:
        return SearchResult(0, 1)

    moves = [(m, 0) for m in sorted(budget.free, key=str)] + [(m, 1) for m in sorted(budget.costed, key=str)]
    dist = {_key(start): 0}
    parent: dict[str, tuple[str, Move]] = {}
    queue = deque([(start, 0)])
    best: tuple[int, str] | None = None
    exhausted = False
    while queue:
        d, cost = queue.popleft()
        if best is not None and cost >= best[0]:
            break
        here = _key(d)
        if cost > dist[here]:
            continue
        for move, step in moves:
            nc = cost + step
            if nc > budget.max_depth:
                continue
            for site in iter_sites(d, move, budget.max_gaps):
                nd = norm(apply_move(d, site, check=False))
                k = _key(nd)
                if k in dist and dist[k] <= nc:
                    continue
                dist[k] = nc
                parent[k] = (here, move)
                if k in targets:
                    if best is None or nc < best[0]:
                        best = (nc, k)
                    continue
                if len(dist) >= budget.max_states:
                    exhausted = True
                    queue.clear()
                    break
                if step == 0:
                    queue.appendleft((nd, nc))
                else:
                    queue.append((nd, nc))
            if exhausted:
                break
        if exhausted:
            break
    if best is None:
        return SearchResult(None, len(dist), exhausted)
    path = []
    k = best[1]
    while k in parent:
        k, move = parent[k]
        path.append(move)
    return SearchResult(best[0], len(dist), exhausted, path[::-1])


def bounded_distance(a: ChordDiagram, b: ChordDiagram, budget: SearchBudget) -> int | None:
    """Fewest costed moves from ``a`` to ``b`` found within ``budget``, or ``None``."""
    return search(a, b, budget).distance


def verify_script(d: ChordDiagram, script: Sequence[Iterable[str]]) -> bool:
    """Remove each step's chords in turn, simplifying after each; true iff nothing is left.

    Names must be chords of ``d``; chords that an earlier simplification
    already removed are skipped.
    """
    steps = [tuple(step) for step in script]
    unknown = {c for step in steps for c in step} - set(d.chord_map)
    if unknown:
        raise KeyError(f"unknown chords: {sorted(unknown)}")
    if not steps:
        d = greedy_simplify(d)[0]
    for step in steps:
        d = remove_chords(d, [c for c in step if c in d.chord_map])
        d = greedy_simplify(d)[0]
    return len(d.chords) == 0
