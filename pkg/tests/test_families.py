from __future__ import annotations

import itertools
from collections import Counter

import pytest

from vgauss.diagram import canonicalize, close_product, parse_long_template
from vgauss.equivalence import MoveClass, distance_lower_bound, lower_bounds
from vgauss.families import (
    FAMILY_IDS,
    FamilySpec,
    expected_spectrum,
    family_diagram,
    fixture_name,
    load_template,
    move_class,
    template,
    unknotting_script,
    write_fixtures,
)
from vgauss.invariants import chord_indices, writhe_spectrum
from vgauss.moves import enumerate_sites, parse_moves
from vgauss.search import verify_script

MIN_S = {"VDC": 1, "VS": 3, "VP": 1, "INDEP_A": 1, "INDEP_B": 2}
CASES = [(fid, s, m) for fid in FAMILY_IDS for s in range(MIN_S[fid], MIN_S[fid] + 3) for m in (1, 2, 3)]


@pytest.mark.parametrize("fid, s, m", CASES)
def test_spectrum(fid, s, m):
    f = FamilySpec(fid, s, m)
    assert writhe_spectrum(family_diagram(f)) == expected_spectrum(f)


@pytest.mark.parametrize("fid, s, m", [c for c in CASES if c[1] < MIN_S[c[0]] + 2])
def test_script(fid, s, m):
    f = FamilySpec(fid, s, m)
    d = family_diagram(f)
    script = unknotting_script(f)
    assert len(script) == m
    assert verify_script(d, script)
    assert not verify_script(d, script[:-1])


@pytest.mark.parametrize("fid", ["VDC", "VS", "VP"])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_bound_is_sharp(fid, m):
    f = FamilySpec(fid, MIN_S[fid] + 1, m)
    assert distance_lower_bound(move_class(fid), family_diagram(f)) == m


def test_independence_gap():
    for s, m in itertools.product((1, 2), (1, 2, 3)):
        b = lower_bounds(MoveClass.VDELTA_CIRC, family_diagram(FamilySpec("INDEP_A", s, m)))
        assert b["odd_writhe"] == m and b["spectrum"] < m
    for s, m in itertools.product((2, 3), (1, 2)):
        b = lower_bounds(MoveClass.VPASS, family_diagram(FamilySpec("INDEP_B", s, m)))
        assert b["odd_writhe"] == m and b["spectrum"] < m


def _removed_signs(fid, s):
    f = FamilySpec(fid, s)
    d = family_diagram(f)
    return sorted(d.signs[c] for c in unknotting_script(f)[0])


def test_removed_chords_form_one_move():
    # the b-chords of one copy are a deletion site of the family's move
    for fid, kinds in (("VDC", "vdc:del"), ("VP", "vp:del"), ("INDEP_A", "vdc:del"), ("INDEP_B", "vp:del")):
        f = FamilySpec(fid, MIN_S[fid])
        d = family_diagram(f)
        want = set(unknotting_script(f)[0])
        hits = [s for m in parse_moves(kinds) for s in enumerate_sites(d, m) if set(s.chords) == want]
        assert len(hits) == 1, fid


def test_removed_sign_patterns():
    assert _removed_signs("VDC", 2) == [-1, -1, -1]
    assert _removed_signs("INDEP_A", 2) == [1, 1, 1]
    assert _removed_signs("VP", 2) == [-1, -1, 1, 1]
    assert _removed_signs("INDEP_B", 2) == [-1, -1, 1, 1]
    assert _removed_signs("VS", 3) == [1, 1, 1, 1]


def test_index_of_removed_chords():
    # the move touches only chords with the indices the spectrum predicts
    idx = chord_indices(family_diagram(FamilySpec("VDC", 2)))
    assert Counter(idx[c] for c in ("b1_1", "b2_1", "b3_1")) == Counter({4: 2, -8: 1})


@pytest.mark.parametrize("fid", FAMILY_IDS)
def test_distinct_across_s(fid):
    keys = {canonicalize(family_diagram(FamilySpec(fid, s))) for s in range(MIN_S[fid], MIN_S[fid] + 3)}
    assert len(keys) == 3


@pytest.mark.parametrize("fid, s", [(f, s) for f in FAMILY_IDS for s in range(MIN_S[f], 5)])
def test_shipped_fixture(fid, s):
    assert load_template(fid, s) == template(fid, s)


def test_template_beyond_shipped():
    assert load_template("VDC", 7) == template("VDC", 7)


def test_write_fixtures(tmp_path):
    paths = write_fixtures(tmp_path, max_s=3)
    assert {p.name for p in paths} >= {fixture_name("VDC", 1), fixture_name("INDEP_B", 3)}
    assert parse_long_template((tmp_path / "vp_s2.gdf").read_text()) == template("VP", 2)


def test_copies():
    f = FamilySpec("VP", 1, 3)
    t = template("VP", 1)
    assert family_diagram(f) == close_product(t, 3)
    assert len(family_diagram(f).chords) == 3 * len(t.chord_ids)


def test_id_case_insensitive():
    assert FamilySpec("indep_a", 1).id == "INDEP_A"
    assert move_class("vs") is MoveClass.VSHARP


@pytest.mark.parametrize("args", [("VS", 2), ("INDEP_B", 1), ("VDC", 0), ("XX", 3), ("VDC", 1, 0)])
def test_out_of_range(args):
    with pytest.raises(ValueError):
        FamilySpec(*args)


def test_unknown_class():
    with pytest.raises(ValueError):
        move_class("nope")
