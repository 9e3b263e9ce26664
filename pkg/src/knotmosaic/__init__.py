"""Knot mosaics: tiles, boards, Reidemeister moves, Jones identification and exhaustive tabulation."""

from knotmosaic.enumerate import EnumFilter, enumerate_codes, enumerate_mosaics
from knotmosaic.invariants import (
    ComponentCountError,
    PlanarDiagram,
    determinant,
    is_alternating,
    nugatory_crossings,
    kauffman_bracket,
    normalized_jones,
    to_planar_diagram,
    writhe,
)
from knotmosaic.laurent import LaurentPoly
from knotmosaic.mosaic import (
    ALL_SYMMETRIES,
    DIHEDRAL,
    InnerBoard,
    InvalidMosaicError,
    Mosaic,
    MosaicFormatError,
    Symmetry,
    crossing_tiles,
    inner_board,
    is_suitably_connected,
    load_mosaic,
    nonblank_tiles,
    parse_mosaic,
    serialize_mosaic,
    trace_components,
    transform,
)
from knotmosaic.moves import (
    MoveKind,
    MoveSite,
    all_crossing_inner,
    apply_move,
    complete_boundary,
    corner_reduce,
    find_moves,
    reduce_greedy,
)
from knotmosaic.reference import Chirality, KnotId, KnotRecord, bound_report, identify, reference_table
from knotmosaic.render import render_svg
from knotmosaic.tabulation import TabRow, absence_proof, realizable_knots, survey, tabulate
from knotmosaic.tiles import Edge, Tile, tile_connections

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
