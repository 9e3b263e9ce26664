import itertools
import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import GOLDEN
from knotmosaic.enumerate import (
    MAX_SIZE,
    EnumFilter,
    codes_to_mosaic,
    enumerate_codes,
    enumerate_mosaics,
    first_rows,
    sample_codes,
)
from knotmosaic.invariants import mosaic_is_alternating
from knotmosaic.mosaic import Mosaic, component_count, crossing_tiles, inner_board, is_suitably_connected
from knotmosaic.moves import all_crossing_inner

# connection points per code as (N, E, S, W); written out independently of the tile module
_CONN = {
    0: (0, 0, 0, 0),
    1: (0, 0, 1, 1),
    2: (0, 1, 1, 0),
    3: (1, 1, 0, 0),
    4: (1, 0, 0, 1),
    5: (0, 1, 0, 1),
    6: (1, 0, 1, 0),
}
for _k in (7, 8, 9, 10):
    _CONN[_k] = (1, 1, 1, 1)


def brute_force(n: int):
    """Every n x n grid over 11 codes that is suitably connected.

    Suitable connection is a conjunction of per-edge conditions, so it is
    applied row by row (horizontal edges and the board sides first, then the
    edges between consecutive rows); the result is exactly the filter of all
    11^(n*n) grids.
    """

    def row_ok(row):
        if _CONN[row[0]][3] or _CONN[row[-1]][1]:
            return False
        return all(_CONN[a][1] == _CONN[b][3] for a, b in zip(row, row[1:]))

    rows = [r for r in itertools.product(range(11), repeat=n) if row_ok(r)]
    top = [r for r in rows if not any(_CONN[t][0] for t in r)]
    out = []

    def extend(grid):
        if len(grid) == n:
            if not any(_CONN[t][2] for t in grid[-1]):
                out.append(tuple(grid))
            return
        last = grid[-1]
        for r in rows:
            if all(_CONN[a][2] == _CONN[b][0] for a, b in zip(last, r)):
                extend(grid + [r])

    for r in top:
        extend([r])
    return out


@pytest.mark.parametrize("n", [2, 3])
def test_frontier_matches_brute_force(n):
    grids = brute_force(n)
    all_boards = {tuple(itertools.chain(*g)) for g in grids}
    assert all(is_suitably_connected(Mosaic.from_codes(g)) for g in grids)
    knots = {codes for codes in all_boards if component_count(codes_to_mosaic(codes, n)) == 1}
    assert list(enumerate_codes(n)) == sorted(knots)
    everything = list(enumerate_codes(n, EnumFilter(require_single_component=False)))
    assert everything == sorted(all_boards)


def test_small_counts():
    assert [m.codes for m in enumerate_mosaics(2)] == [((2, 1), (3, 4))]
    assert len(list(enumerate_codes(3, EnumFilter(require_single_component=False)))) == 22
    assert len(list(enumerate_codes(4, EnumFilter(require_single_component=False)))) == 2594


@pytest.mark.parametrize("n", [2, 3, 4])
def test_golden_counts(n):
    golden = json.loads((GOLDEN / f"survey_{n}.json").read_text())
    codes = list(enumerate_codes(n))
    assert len(codes) == golden["boards"]
    assert codes == sorted(codes) and len(set(codes)) == len(codes)


def test_size_range():
    for bad in (1, MAX_SIZE + 1):
        with pytest.raises(ValueError):
            list(enumerate_codes(bad))


def test_emitted_boards_are_knots():
    for m in enumerate_mosaics(4):
        assert is_suitably_connected(m)
        assert component_count(m) == 1


def test_all_crossing_4x4():
    f = EnumFilter(exact_crossing_tiles=4, require_single_component=False)
    boards = list(enumerate_mosaics(4, f))
    # 16 over/under choices on the inner board, two completions each
    assert len(boards) == 32
    uniform = [m for m in boards if inner_board(m) == all_crossing_inner(4)]
    assert sorted(component_count(m) for m in uniform) == [1, 2]


@pytest.mark.parametrize(
    "f",
    [
        EnumFilter(max_crossing_tiles=2),
        EnumFilter(exact_crossing_tiles=3),
        EnumFilter(alternating_only=True),
        EnumFilter(max_crossing_tiles=3, alternating_only=True, require_single_component=False),
    ],
)
def test_filters_only_prune(f):
    base = EnumFilter(require_single_component=f.require_single_component)
    full = list(enumerate_codes(4, base))
    kept = list(enumerate_codes(4, f))

    def passes(codes):
        m = codes_to_mosaic(codes, 4)
        k = crossing_tiles(m)
        if f.max_crossing_tiles is not None and k > f.max_crossing_tiles:
            return False
        if f.exact_crossing_tiles is not None and k != f.exact_crossing_tiles:
            return False
        return not f.alternating_only or mosaic_is_alternating(m)

    assert kept == [c for c in full if passes(c)]


def test_prefix_partition_is_exact():
    whole = list(enumerate_codes(4))
    parts = [c for row in first_rows(4) for c in enumerate_codes(4, prefix=row)]
    assert parts == whole


@given(st.integers(0, 2**32 - 1), st.sampled_from([2, 3, 4, 5, 6]))
def test_sampler_respects_filter(seed, n):
    f = EnumFilter(max_crossing_tiles=6)
    codes = sample_codes(n, random.Random(seed), f, crossing_weight=2.0)
    m = codes_to_mosaic(codes, n)
    assert is_suitably_connected(m)
    assert component_count(m) == 1
    assert crossing_tiles(m) <= 6


def test_sampler_exact_crossings():
    rng = random.Random(3)
    for _ in range(20):
        m = codes_to_mosaic(sample_codes(5, rng, EnumFilter(exact_crossing_tiles=7), 3.0), 5)
        assert crossing_tiles(m) == 7


def test_six_by_six_filtered_run_starts():
    f = EnumFilter(max_crossing_tiles=0)
    first = next(iter(enumerate_codes(6, f)))
    assert component_count(codes_to_mosaic(first, 6)) == 1
