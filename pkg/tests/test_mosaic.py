import pytest
from hypothesis import given

from conftest import corpus, fixture
from strategies import dihedral, mosaics, raw_boards, symmetries
from knotmosaic.mosaic import (
    ALL_SYMMETRIES,
    CROSSING_SWAP,
    IDENTITY,
    ROT90,
    InnerBoard,
    Mosaic,
    MosaicFormatError,
    Symmetry,
    canonical_form,
    component_count,
    crossing_tiles,
    inner_board,
    is_suitably_connected,
    mismatched_edges,
    nonblank_tiles,
    parse_mosaic,
    serialize_mosaic,
    trace_components,
    transform,
)
from knotmosaic.tiles import Edge, Tile

UNKNOT = "2 2\n2 1\n3 4"


def test_parse_unknot():
    m = parse_mosaic(UNKNOT)
    assert m.rows == m.cols == 2
    assert m.cells == ((Tile.ARC_SE, Tile.ARC_SW), (Tile.ARC_NE, Tile.ARC_NW))


def test_parse_single_crossing_board():
    m = parse_mosaic("1 1\n9")
    assert m.cells == ((Tile.CROSS_V,),)
    assert not is_suitably_connected(m)


def test_parse_skips_comments_and_trailing_newline():
    m = parse_mosaic("# a comment\n2 2\n# another\n2 1\n3 4\n\n")
    assert m == parse_mosaic(UNKNOT)


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("2 2\n2 11\n3 4", 2, "out of range"),
        ("2 2\n2 -1\n3 4", 2, "out of range"),
        ("2 2\n2 x\n3 4", 2, "out of range"),
        ("2 2\n2 1 0\n3 4", 2, "expected 2 codes"),
        ("2 2\n2 1\n3", 3, "expected 2 codes"),
        ("2\n2 1\n3 4", 1, "malformed header"),
        ("two 2\n2 1\n3 4", 1, "malformed header"),
        ("2 2\n2 1", 3, "expected 2 rows"),
        ("2 2\n2 1\n3 4\n0 0", 4, "expected 2 rows"),
        ("", 1, "missing header"),
        ("0 2", 1, "positive"),
    ],
)
def test_parse_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(MosaicFormatError) as err:
        parse_mosaic(text)
    assert err.value.line == line
    assert fragment in str(err.value)


def test_serialize_is_exact():
    assert serialize_mosaic(parse_mosaic(UNKNOT)) == UNKNOT


def test_round_trip_on_every_fixture():
    boards = corpus()
    assert len(boards) >= 40
    for m in boards:
        assert parse_mosaic(serialize_mosaic(m)) == m


@given(raw_boards)
def test_round_trip_on_arbitrary_grids(codes):
    m = Mosaic.from_codes(codes)
    assert parse_mosaic(serialize_mosaic(m)).codes == m.codes


def test_rectangular_boards_are_representable():
    m = parse_mosaic("2 3\n2 5 1\n3 5 4")
    assert (m.rows, m.cols) == (2, 3)
    assert is_suitably_connected(m)
    assert component_count(m) == 1
    with pytest.raises(ValueError):
        m.size


def test_suitable_connection_examples():
    u = parse_mosaic(UNKNOT)
    assert is_suitably_connected(u)
    broken = u.replace({(1, 1): Tile.BLANK})
    assert not is_suitably_connected(broken)
    assert set(mismatched_edges(broken)) == {(0, 1, Edge.S), (1, 0, Edge.E)}
    assert is_suitably_connected(Mosaic.blank(3))


def test_trace_examples():
    assert len(trace_components(parse_mosaic(UNKNOT))) == 1
    assert trace_components(Mosaic.blank(3)) == []
    assert len(trace_components(fixture("links/hopf4"))) == 2


def test_trace_starts_at_least_point():
    (loop,) = trace_components(parse_mosaic(UNKNOT))
    assert loop[0] == min(loop)
    assert len(loop) == 4


def test_trace_rejects_unsuitable_board():
    with pytest.raises(ValueError):
        trace_components(parse_mosaic("1 1\n9"))


def test_counts():
    u = parse_mosaic(UNKNOT)
    assert (crossing_tiles(u), nonblank_tiles(u)) == (0, 4)
    assert crossing_tiles(fixture("trefoil4")) == 3


@given(mosaics(single=False))
def test_trace_covers_every_connection_point_once(m):
    seen = []
    for loop in trace_components(m):
        for r, c, entry in loop:
            t = m.cells[r][c]
            seen += [(r, c, entry), (r, c, t.exit(entry))]
    expected = [(r, c, e) for r, c in m.positions() for e in m.cells[r][c].connections]
    assert sorted(seen) == sorted(expected)


def test_inner_board_labels():
    codes = [[0] * 5 for _ in range(5)]
    for k in range(9):
        codes[1 + k // 3][1 + k % 3] = k + 1
    inner = inner_board(Mosaic.from_codes(codes))
    assert [int(inner.label(k)) for k in range(1, 10)] == list(range(1, 10))
    assert inner.embed().codes[1][1:4] == (1, 2, 3)
    with pytest.raises(ValueError):
        InnerBoard(5, ((Tile.BLANK,),))


# -- symmetry group ---------------------------------------------------------


def test_rotation_examples():
    u = parse_mosaic(UNKNOT)
    assert transform(u, ROT90) == u
    m = parse_mosaic("1 2\n1 9")
    r = transform(m, ROT90)
    assert (r.rows, r.cols) == (2, 1)
    assert r.cells == ((Tile.ARC_NW,), (Tile.CROSS_H,))


def test_group_closure_and_identity():
    for a in ALL_SYMMETRIES:
        assert a.then(IDENTITY) == a == IDENTITY.then(a)
        assert a.then(a.inverse) == IDENTITY
        for b in ALL_SYMMETRIES:
            assert a.then(b) in ALL_SYMMETRIES
    assert len(set(ALL_SYMMETRIES)) == 16


@given(mosaics(single=False), symmetries, symmetries)
def test_transform_is_group_action(m, s1, s2):
    assert transform(transform(m, s1), s2) == transform(m, s1.then(s2))
    assert transform(m, IDENTITY) == m


@given(mosaics(single=False), symmetries)
def test_symmetries_preserve_validity_and_components(m, s):
    t = transform(m, s)
    assert is_suitably_connected(t)
    assert component_count(t) == component_count(m)
    assert crossing_tiles(t) == crossing_tiles(m)


@given(raw_boards.map(Mosaic.from_codes), symmetries)
def test_validity_is_symmetry_invariant_on_arbitrary_grids(m, s):
    assert is_suitably_connected(transform(m, s)) == is_suitably_connected(m)
    assert len(mismatched_edges(transform(m, s))) == len(mismatched_edges(m))


@given(mosaics(), dihedral)
def test_canonical_form_is_orbit_invariant(m, s):
    assert canonical_form(transform(m, s)) == canonical_form(m)
    assert canonical_form(transform(m, CROSSING_SWAP)) == canonical_form(m)


def test_symmetry_normalizes_rotation():
    assert Symmetry(5) == Symmetry(1)
    assert Symmetry(-1).inverse == Symmetry(1)
