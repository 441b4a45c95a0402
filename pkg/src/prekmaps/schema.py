"""JSON schemas for the structured outputs of the command line tool."""

SCHEMA_VERSION = 1

_parts = {"type": "array", "items": {"type": "integer", "minimum": 1}}

COLLISION_REPORT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": [
        "schema_version", "n", "k", "length_filter", "partitions_examined",
        "degenerate_count", "injective", "classes",
    ],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "n": {"type": "integer", "minimum": 0},
        "k": {"type": "integer", "minimum": 1},
        "length_filter": {"oneOf": [{"const": "all"}, {"type": "integer", "minimum": 1}]},
        "partitions_examined": {"type": "integer", "minimum": 0},
        "degenerate_count": {"type": "integer", "minimum": 0},
        "injective": {"type": "boolean"},
        "classes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["image", "preimage_count", "preimages"],
                "properties": {
                    "image": _parts,
                    "preimage_count": {"type": "integer", "minimum": 2},
                    "preimages": {"type": "array", "items": _parts, "minItems": 2, "maxItems": 16},
                },
            },
        },
    },
}

CENSUS_RECORD = {
    "type": "object",
    "required": ["schema_version", "n", "exact_count", "lower_bound", "images", "divisor_witnesses"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "n": {"type": "integer", "minimum": 1},
        "exact_count": {"type": "integer", "minimum": 0},
        "lower_bound": {"type": "integer", "minimum": 1},
        "images": {"type": "array", "items": _parts},
        "divisor_witnesses": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["preimage", "image"],
                "properties": {"preimage": _parts, "image": _parts},
            },
        },
    },
}

COUNTEREXAMPLE_PAIR = {
    "type": "object",
    "required": ["family", "params", "k", "weight", "first", "second", "shared_image"],
    "properties": {
        "family": {"type": "string"},
        "params": {"type": "object", "additionalProperties": {"type": "integer"}},
        "k": {"type": "integer", "minimum": 1},
        "weight": {"type": "integer", "minimum": 0},
        "first": _parts,
        "second": _parts,
        "shared_image": _parts,
    },
}

PREK_RESULT = {
    "type": "object",
    "required": ["source", "k", "image", "part_count", "image_weight", "image_product", "degenerate"],
    "properties": {
        "source": _parts,
        "k": {"type": "integer", "minimum": 1},
        "image": _parts,
        "part_count": {"type": "integer", "minimum": 0},
        "image_weight": {"type": "integer", "minimum": 0},
        "image_product": {"type": "integer", "minimum": 1},
        "degenerate": {"type": "boolean"},
    },
}

SUITE_RESULT = {
    "type": "object",
    "required": ["suite", "n_max", "ok", "checked", "failures", "details"],
    "properties": {
        "suite": {"type": "string"},
        "n_max": {"type": "integer"},
        "ok": {"type": "boolean"},
        "checked": {"type": "integer", "minimum": 0},
        "failures": {"type": "array"},
        "details": {"type": "object"},
    },
}

RESULT_SCHEMAS = {
    "map": PREK_RESULT,
    "collide": COLLISION_REPORT,
    "sweep": COLLISION_REPORT,
    "family": COUNTEREXAMPLE_PAIR,
    "census": CENSUS_RECORD,
    "verify": SUITE_RESULT,
}

# every json document the tool emits has this envelope
ENVELOPE = {
    "type": "object",
    "required": ["schema_version", "command", "results"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "command": {"enum": sorted(RESULT_SCHEMAS)},
        "results": {"type": "array"},
        "summary": {"type": "object"},
    },
}
