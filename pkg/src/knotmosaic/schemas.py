"""JSON Schemas of the ``--json`` output of each CLI subcommand (draft 2020-12)."""

_INT = {"type": "integer"}
_STR = {"type": "string"}
_BOOL = {"type": "boolean"}
_NSTR = {"type": ["string", "null"]}
_NINT = {"type": ["integer", "null"]}

_FILTER = {
    "type": "object",
    "properties": {
        "max_crossing_tiles": _NINT,
        "exact_crossing_tiles": _NINT,
        "alternating_only": _BOOL,
        "require_single_component": _BOOL,
    },
    "required": ["max_crossing_tiles", "exact_crossing_tiles", "alternating_only", "require_single_component"],
}

_STEP = {"type": "array", "prefixItems": [_INT, _INT, {"enum": ["N", "E", "S", "W"]}], "items": False}


def _obj(required: dict, optional: dict | None = None) -> dict:
    return {
        "type": "object",
        "properties": {**required, **(optional or {})},
        "required": sorted(required),
        "additionalProperties": False,
    }


ERROR = {"type": "object", "properties": {"error": _STR}, "required": ["error"]}

TAB_ROW = _obj(
    {
        "knot": _STR,
        "mosaic_number": _NINT,
        "lower_bound": _INT,
        "upper_bound": _NINT,
        "min_tile_count": _NINT,
        "tile_count_exhaustive": _BOOL,
        "witness_source": _NSTR,
        "witness": {"type": ["array", "null"], "items": {"type": "array", "items": _INT}},
    }
)

SCHEMAS = {
    "validate": _obj(
        {"file": _STR, "suitably_connected": _BOOL, "components": _INT, "mismatches": {"type": "array", "items": _STEP}}
    ),
    "trace": _obj({"file": _STR, "components": {"type": "array", "items": {"type": "array", "items": _STEP}}}),
    "identify": _obj({"file": _STR, "knot": _NSTR, "chirality": _NSTR, "jones_A": _STR, "jones_t": _STR}),
    "jones": _obj(
        {
            "file": _STR,
            "jones_A": _STR,
            "jones_t": _STR,
            "writhe": _INT,
            "crossings": _INT,
            "determinant": _INT,
            "alternating": _BOOL,
            "pd": {"type": "array", "items": {"type": "array", "items": _INT, "minItems": 4, "maxItems": 4}},
        }
    ),
    "reduce": _obj({"file": _STR, "crossings_before": _INT, "crossings_after": _INT, "mosaic": _STR}),
    "moves": _obj(
        {
            "file": _STR,
            "moves": {
                "type": "array",
                "items": _obj(
                    {
                        "kind": {"enum": ["R1", "R2", "CornerR1"]},
                        "anchor": {"type": "array", "items": _INT},
                        "variant": _INT,
                        "crossings_after": _INT,
                    }
                ),
            },
        }
    ),
    "complete": _obj(
        {"completions": {"type": "array", "items": _obj({"components": _INT, "mosaic": _STR})}}
    ),
    "enumerate": _obj({"size": _INT, "filter": _FILTER, "boards": _INT}),
    "enumerate_identify": _obj(
        {
            "size": _INT,
            "filter": _FILTER,
            "boards": _INT,
            "knots": {"type": "object", "additionalProperties": _obj({"count": _INT, "min_nonblank": _INT, "min_crossings": _INT})},
            "unidentified_boards": _INT,
            "unidentified_jones_values": _INT,
        }
    ),
    "absence": _obj(
        {
            "knot": _STR,
            "size": _INT,
            "absent": _BOOL,
            "boards_enumerated": _INT,
            "distinct_jones_values": _INT,
            "filter": _FILTER,
            "seconds": {"type": "number"},
        }
    ),
    "tabulate": {"type": "array", "items": TAB_ROW},
    "bounds": _obj(
        {
            "bounds": {
                "type": "array",
                "items": _obj(
                    {
                        "name": _STR,
                        "crossing_number": _INT,
                        "mosaic_number": _INT,
                        "lower_printed": _INT,
                        "upper": _INT,
                        "lower_ok": _BOOL,
                        "upper_ok": _BOOL,
                    }
                ),
            }
        }
    ),
    "render": _obj({"file": _STR, "svg": _STR, "mismatches": _INT}),
}
