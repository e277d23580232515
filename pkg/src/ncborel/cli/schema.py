"""JSON schema (draft 2020-12) for every document the CLI emits."""

from .formatting import SCHEMA

_TERM = {
    "type": "object",
    "required": ["x", "params", "re", "im"],
    "properties": {
        "x": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 3, "maxItems": 3},
        "params": {"type": "object", "additionalProperties": {"type": "integer", "minimum": 1}},
        "re": {"type": "string"},
        "im": {"type": "string"},
    },
    "additionalProperties": False,
}

_NCPOLY = {
    "type": "object",
    "required": ["kind", "text", "terms"],
    "properties": {
        "kind": {"const": "ncpoly"},
        "text": {"type": "string"},
        "terms": {"type": "array", "items": {"$ref": "#/$defs/term"}},
    },
    "additionalProperties": False,
}

_FORM = {
    "type": "object",
    "required": ["kind", "degree", "text", "components"],
    "properties": {
        "kind": {"const": "form"},
        "degree": {"type": "integer", "minimum": 0, "maximum": 3},
        "text": {"type": "string"},
        "components": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["basis", "coeff"],
                "properties": {
                    "basis": {"type": "array", "items": {"enum": [1, 2, 3]}},
                    "coeff": {"type": "array", "items": {"$ref": "#/$defs/term"}},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

_VALUE = {"oneOf": [{"$ref": "#/$defs/ncpoly"}, {"$ref": "#/$defs/form"}]}

_CLAIM = {
    "type": "object",
    "required": ["id", "location", "quote", "variant", "status", "computed", "claimed"],
    "properties": {
        "id": {"type": "string"},
        "location": {"type": "string"},
        "quote": {"type": "string"},
        "variant": {"enum": ["consistent", "paper"]},
        "convention": {"type": "string"},
        "status": {"enum": ["PASS", "FAIL", "AMBIGUOUS"]},
        "computed": {"type": "string"},
        "claimed": {"type": "string"},
    },
    "additionalProperties": False,
}

_RESULTS = {
    "partials": {
        "type": "object",
        "required": ["kind", "variant", "components"],
        "properties": {
            "kind": {"const": "partials"},
            "variant": {"type": "string"},
            "components": {"type": "array", "items": {"$ref": "#/$defs/ncpoly"}, "minItems": 3, "maxItems": 3},
        },
    },
    "kernel": {
        "type": "object",
        "required": ["kind", "operator", "grade_bound", "blocks"],
        "properties": {
            "kind": {"const": "kernel"},
            "operator": {"enum": ["box0", "box1"]},
            "grade_bound": {"type": "integer"},
            "variant": {"type": "string"},
            "blocks": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["grade", "dimension", "basis"],
                    "properties": {
                        "grade": {"type": "integer"},
                        "dimension": {"type": "integer"},
                        "basis": {"type": "array", "items": _VALUE},
                    },
                },
            },
        },
    },
    "cohomology": {
        "type": "object",
        "required": ["kind", "max_grade", "entries"],
        "properties": {
            "kind": {"const": "cohomology"},
            "max_grade": {"type": "integer"},
            "entries": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["degree", "grade", "dim", "raw", "kernel", "image"],
                    "properties": {k: {"type": "integer"} for k in ("degree", "grade", "dim", "raw", "kernel", "image")},
                    "additionalProperties": False,
                },
            },
        },
    },
    "primitive": {
        "type": "object",
        "required": ["kind", "found", "primitive"],
        "properties": {
            "kind": {"const": "primitive"},
            "found": {"type": "boolean"},
            "grade_bound": {"type": "integer"},
            "primitive": {"oneOf": [{"type": "null"}, _VALUE]},
        },
    },
    "wave": {
        "type": "object",
        "required": ["kind", "order", "convention", "series"],
        "properties": {
            "kind": {"const": "wave"},
            "order": {"type": "integer"},
            "convention": {"enum": ["plain", "x1-left", "x1-right"]},
            "series": {"$ref": "#/$defs/ncpoly"},
        },
    },
    "wave_check": {
        "type": "object",
        "required": ["kind", "check", "order", "convention", "variant", "passed", "first_failure", "residuals"],
        "properties": {
            "kind": {"const": "wave_check"},
            "check": {"enum": ["d", "box"]},
            "order": {"type": "integer"},
            "convention": {"enum": ["plain", "x1-left", "x1-right"]},
            "variant": {"enum": ["consistent", "paper"]},
            "passed": {"type": "boolean"},
            "first_failure": {"type": ["integer", "null"]},
            "residuals": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["order", "value"],
                    "properties": {"order": {"type": "integer"}, "value": _VALUE},
                },
            },
        },
    },
    "claims_report": {
        "type": "object",
        "required": ["kind", "counts", "entries"],
        "properties": {
            "kind": {"const": "claims_report"},
            "counts": {
                "type": "object",
                "required": ["PASS", "FAIL", "AMBIGUOUS"],
                "additionalProperties": {"type": "integer"},
            },
            "entries": {"type": "array", "items": {"$ref": "#/$defs/claim"}},
        },
    },
}

_ERROR = {
    "type": "object",
    "required": ["kind", "message"],
    "properties": {
        "kind": {"type": "string"},
        "message": {"type": "string"},
        "offset": {"type": ["integer", "null"]},
        "witness": _VALUE,
    },
}

DOCUMENT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": "ncborel/1",
    "type": "object",
    "required": ["schema", "command"],
    "properties": {
        "schema": {"const": SCHEMA},
        "command": {"type": "string"},
        "result": {"oneOf": [_VALUE] + [{"$ref": f"#/$defs/{k}"} for k in _RESULTS]},
        "error": {"$ref": "#/$defs/error"},
    },
    "oneOf": [{"required": ["result"]}, {"required": ["error"]}],
    "additionalProperties": False,
    "$defs": {
        "term": _TERM,
        "ncpoly": _NCPOLY,
        "form": _FORM,
        "claim": _CLAIM,
        "error": _ERROR,
        **_RESULTS,
    },
}
