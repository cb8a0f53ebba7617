"""Independent reference computations used by the tests.

Nothing here goes through the package's invariant or move code: indices
and intersection numbers are recomputed from raw token lists, and move
tables are checked against configurations of straight lines in the plane.
"""
from __future__ import annotations

import itertools
import random
from collections import Counter

from vgauss.diagram import ChordDiagram, Slot


def tokens(d: ChordDiagram) -> list[list[tuple[str, str, int]]]:
    """(role, label, sign) per component, read back from the GDF text."""
    from vgauss.diagram import serialize_gdf

    out = []
    for comp in serialize_gdf(d).split(";"):
        out.append([(t[0], t[1:-1], 1 if t[-1] == "+" else -1) for t in comp.split()])
    return out


def brute_index(word: list[tuple[str, str, int]], label: str) -> int:
    """Walk forward from the tail of ``label`` to its head, summing endpoint signs."""
    n = len(word)
    start = next(i for i, (r, lab, _) in enumerate(word) if lab == label and r == "O")
    total = 0
    k = (start + 1) % n
    while not (word[k][1] == label and word[k][0] == "U"):
        role, _, sign = word[k]
        total += -sign if role == "O" else sign
        k = (k + 1) % n
    return total


def brute_index_complement(word: list[tuple[str, str, int]], label: str) -> int:
    """Same sum over the other arc, from the head back round to the tail."""
    n = len(word)
    start = next(i for i, (r, lab, _) in enumerate(word) if lab == label and r == "U")
    total = 0
    k = (start + 1) % n
    while not (word[k][1] == label and word[k][0] == "O"):
        role, _, sign = word[k]
        total += -sign if role == "O" else sign
        k = (k + 1) % n
    return total


def brute_lambda(d: ChordDiagram) -> list[int]:
    comps = tokens(d)
    where: dict[str, list[int]] = {}
    for ci, comp in enumerate(comps):
        for _, lab, _ in comp:
            where.setdefault(lab, []).append(ci)
    out = []
    for ci, comp in enumerate(comps):
        s = 0
        for role, lab, sign in comp:
            if len(set(where[lab])) == 2:
                s += -sign if role == "O" else sign
        out.append(s)
    return out


def brute_spectrum(d: ChordDiagram) -> dict[int, int]:
    word = tokens(d)[0]
    acc: Counter = Counter()
    for role, lab, sign in word:
        if role == "O":
            ind = brute_index(word, lab)
            if ind:
                acc[ind] += sign
    return {k: v for k, v in acc.items() if v}


def all_knot_diagrams(n_chords: int, signs: bool = True):
    """Every one-component diagram with ``n_chords`` chords on positions 0..2n-1."""
    points = list(range(2 * n_chords))

    def matchings(pts):
        if not pts:
            yield []
            return
        a = pts[0]
        for i in range(1, len(pts)):
            rest = pts[1:i] + pts[i + 1:]
            for m in matchings(rest):
                yield [(a, pts[i])] + m

    sign_choices = list(itertools.product((1, -1), repeat=n_chords)) if signs else [(1,) * n_chords]
    for m in matchings(points):
        for flips in itertools.product((False, True), repeat=n_chords):
            word: list[Slot | None] = [None] * (2 * n_chords)
            for k, ((a, b), f) in enumerate(zip(m, flips)):
                t, h = (b, a) if f else (a, b)
                word[t] = Slot(str(k + 1), True)
                word[h] = Slot(str(k + 1), False)
            base = ChordDiagram.from_words([word], {str(k + 1): 1 for k in range(n_chords)})
            for sg in sign_choices:
                chords = tuple(
                    type(c)(c.id, s, c.tail, c.head) for c, s in zip(base.chords, (sg[int(c.id) - 1] for c in base.chords))
                )
                yield ChordDiagram(base.sizes, chords)


# --- straight-line configurations -------------------------------------------


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def line_configurations(over, samples: int = 4000, seed: int = 7):
    """Realizable (order, signs) data for three oriented straight lines.

    ``over(i, j)`` says whether line ``i`` passes over line ``j``.  For each
    line, ``order[i]`` is the other line it meets first.  ``signs`` lists
    the crossing signs for the pairs (0,1), (0,2), (1,2).
    """
    rng = random.Random(seed)
    found = set()
    for _ in range(samples):
        pts = [(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(3)]
        dirs = [(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(3)]
        params = {}
        ok = True
        for i, j in itertools.combinations(range(3), 2):
            den = _cross(dirs[i], dirs[j])
            if abs(den) < 1e-9:
                ok = False
                break
            w = (pts[j][0] - pts[i][0], pts[j][1] - pts[i][1])
            params[(i, j)] = _cross(w, dirs[j]) / den
            params[(j, i)] = _cross(w, dirs[i]) / den
        if not ok:
            continue
        order = tuple(min((j for j in range(3) if j != i), key=lambda j: params[(i, j)]) for i in range(3))
        signs = []
        for i, j in ((0, 1), (0, 2), (1, 2)):
            o, u = (i, j) if over(i, j) else (j, i)
            signs.append(1 if _cross(dirs[o], dirs[u]) > 0 else -1)
        found.add((order, tuple(signs)))
    return found


def line_diagram(order, signs, over) -> ChordDiagram:
    """Three-component diagram of a line configuration.

    Line ``i`` becomes component ``i`` holding its two crossings in the order
    met, followed by a separate kink so that the two crossings are adjacent
    in one direction only.
    """
    labels = {(0, 1): "p", (0, 2): "q", (1, 2): "r"}
    sign_of = dict(zip(((0, 1), (0, 2), (1, 2)), signs))
    words = []
    chord_signs = {}
    for i in range(3):
        others = [j for j in range(3) if j != i]
        first = order[i]
        second = next(j for j in others if j != first)
        word = []
        for j in (first, second):
            pair = tuple(sorted((i, j)))
            word.append(Slot(labels[pair], over(i, j)))
            chord_signs[labels[pair]] = sign_of[pair]
        kink = f"k{i}"
        word += [Slot(kink, True), Slot(kink, False)]
        chord_signs[kink] = 1
        words.append(word)
    return ChordDiagram.from_words(words, chord_signs)


def stacked(i: int, j: int) -> bool:
    return i < j


def cyclic(i: int, j: int) -> bool:
    return (j - i) % 3 == 1


ALL_ORDERS = [
    tuple(o)
    for o in itertools.product(*[[j for j in range(3) if j != i] for i in range(3)])
]
ALL_SIGNS = list(itertools.product((1, -1), repeat=3))
