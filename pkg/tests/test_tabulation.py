import json

import pytest

from conftest import FIXTURES, GOLDEN, corpus, fixture
from knotmosaic.enumerate import EnumFilter, codes_to_mosaic, enumerate_codes
from knotmosaic.invariants import normalized_jones, nugatory_crossings, to_planar_diagram
from knotmosaic.mosaic import nonblank_tiles, parse_mosaic
from knotmosaic.reference import identify, reference_table
from knotmosaic.tabulation import (
    FixtureError,
    absence_proof,
    check_fixture,
    load_fixtures,
    realizable_knots,
    survey,
    table_csv,
    tabulate,
)


def test_realizable_small_boards(survey4):
    assert realizable_knots(2) == {"0_1"}
    assert realizable_knots(3) == {"0_1"}
    assert survey4.realizable() == {"0_1", "3_1"}
    assert survey4.unidentified == 0


def test_survey_matches_golden(survey4):
    golden = json.loads((GOLDEN / "survey_4.json").read_text())
    summary = survey4.summary()
    assert summary["boards"] == golden["boards"]
    assert summary["knots"] == golden["knots"]
    assert {k: list(v.witness) for k, v in survey4.knots.items()} == golden["witnesses"]


def test_worker_partitions_agree(survey4):
    s = survey(4, workers=3)
    assert s.summary() == survey4.summary()
    assert s.jones_seen == survey4.jones_seen
    assert {k: v.witness for k, v in s.knots.items()} == {k: v.witness for k, v in survey4.knots.items()}


def test_absence_on_4x4(survey4):
    cert = absence_proof(4, "4_1", done=survey4)
    assert cert.absent and bool(cert)
    assert cert.boards == 1476
    present = absence_proof(4, "3_1", done=survey4)
    assert not present
    d = cert.as_dict()
    assert d["boards_enumerated"] == 1476 and d["filter"]["require_single_component"]


def test_absence_needs_exhaustive_board():
    with pytest.raises(ValueError):
        absence_proof(6, "6_3")
    with pytest.raises(KeyError):
        absence_proof(4, "9_42")


def test_survey_rejects_link_filter():
    with pytest.raises(ValueError):
        survey(3, EnumFilter(require_single_component=False))


def test_every_fixture_validates_and_identifies():
    names = {}
    for m in load_fixtures(FIXTURES):
        names[m.provenance] = check_fixture(m)
    assert names["unknot2"] == "0_1"
    assert names["trefoil4"] == "3_1"
    assert names["7_4_5"] == "7_4"
    six = {k: v for k, v in names.items() if k.endswith("_6")}
    assert len(six) == 29
    assert all(k == f"{v}_6" for k, v in six.items())


def test_fixture_errors_are_named():
    with pytest.raises(FixtureError, match="bad: not suitably"):
        check_fixture(parse_mosaic("2 2\n2 1\n3 0", provenance="bad"))
    with pytest.raises(FixtureError, match="hopf4: 2 components"):
        check_fixture(fixture("links/hopf4"))


def test_tabulate_through_four(survey4):
    surveys = {n: survey(n) for n in (2, 3)} | {4: survey4}
    rows = {r.knot: r for r in tabulate(4, load_fixtures(FIXTURES), surveys=surveys)}
    assert rows["0_1"].mosaic_number == 2 and rows["0_1"].min_tile_count == 4
    assert rows["3_1"].mosaic_number == 4 and rows["3_1"].tile_count_exhaustive
    assert rows["3_1"].min_tile_count == 12
    # nothing bigger is settled with 4x4 exhaustion and no larger witnesses in range
    r = rows["4_1"]
    assert r.mosaic_number is None and r.lower_bound == 5 and r.upper_bound is None
    csv = table_csv(list(rows.values()))
    assert csv.splitlines()[1] == "0_1,2,2,2,4,true,enumeration n=2"


def test_tabulate_rejects_bad_fixture(survey4):
    bad = parse_mosaic("2 2\n2 1\n3 4\n", provenance="ok")
    broken = parse_mosaic("4 4\n0 0 0 0\n0 2 1 0\n0 3 0 0\n0 0 0 0", provenance="broken")
    with pytest.raises(FixtureError, match="broken"):
        tabulate(4, [bad, broken], surveys={2: survey(2), 3: survey(3), 4: survey4})


def test_witnesses_have_stated_counts(survey4):
    for name, st in survey4.knots.items():
        m = survey4.witness(name)
        assert nonblank_tiles(m) == st.min_nonblank
        assert check_fixture(m) == name


def test_reduced_alternating_seven_tiles_give_only_7_4():
    # Alternating boards with a nugatory crossing reduce to smaller knots, so the
    # statement holds for reduced diagrams; the unrestricted run is criterion 3.
    names = []
    for codes in enumerate_codes(5, EnumFilter(exact_crossing_tiles=7, alternating_only=True)):
        m = codes_to_mosaic(codes, 5)
        if not nugatory_crossings(to_planar_diagram(m)):
            names.append(identify(normalized_jones(m)).name)
    assert len(names) == 16
    assert set(names) == {"7_4"}
