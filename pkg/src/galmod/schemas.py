"""JSON schemas for CLI inputs and reports, validated with jsonschema."""

import jsonschema

from .errors import SchemaError

RATIONAL = {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"}

CYCLO = {
    "type": "object",
    "required": ["level", "coeffs"],
    "properties": {
        "level": {"type": "integer", "minimum": 1},
        "coeffs": {"type": "array", "items": RATIONAL},
    },
}

EXPONENTS = {"type": "array", "items": {"type": "integer"}}

GROUP = {"type": "array", "items": {"type": "integer", "minimum": 2}}

CHARFN = {
    "type": "array",
    "items": {"type": "array", "prefixItems": [EXPONENTS, CYCLO], "minItems": 2, "maxItems": 2},
}

FIELD = {
    "type": "object",
    "required": ["conductor"],
    "properties": {
        "conductor": {"type": "integer", "minimum": 1},
        "kernel_generators": {"type": "array", "items": {"type": "integer"}},
    },
    "additionalProperties": False,
}

TORSOR = {
    "type": "object",
    "required": ["gamma", "level", "hom"],
    "properties": {
        "gamma": GROUP,
        "level": {"type": "integer", "minimum": 1},
        "hom": {"type": "array",
                "items": {"type": "array", "prefixItems": [{"type": "integer"}, EXPONENTS],
                          "minItems": 2, "maxItems": 2}},
    },
    "additionalProperties": False,
}

GROUP_ALGEBRA = {
    "type": "object",
    "required": ["gamma", "coeffs"],
    "properties": {
        "gamma": GROUP,
        "level": {"type": "integer", "minimum": 1},
        "coeffs": {"type": "array",
                   "items": {"type": "array", "prefixItems": [EXPONENTS, CYCLO],
                             "minItems": 2, "maxItems": 2}},
    },
}

RAM_DATA = {
    "type": "object",
    "required": ["places"],
    "properties": {
        "places": {"type": "array", "items": {
            "type": "object",
            "required": ["prime", "residue_degree", "inertia_dims"],
            "properties": {
                "prime": {"type": "integer", "minimum": 2},
                "residue_degree": {"type": "integer", "minimum": 1},
                "inertia_dims": {"type": "array", "items": {"type": "integer", "minimum": 0}},
            },
        }},
    },
}

CHAR_VALUE = {"oneOf": [{"type": "integer"}, RATIONAL, CYCLO]}

CHAR_TABLE = {
    "type": "object",
    "required": ["class_sizes", "degrees", "values", "power_map_2"],
    "properties": {
        "name": {"type": "string"},
        "class_sizes": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "degrees": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "values": {"type": "array", "items": {"type": "array", "items": CHAR_VALUE}},
        "power_map_2": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "subgroups": {"type": "array"},
    },
}

RELK = {
    "type": "object",
    "required": ["group", "finite", "global"],
    "properties": {
        "group": GROUP,
        "finite": {"type": "object", "patternProperties": {"^[0-9]+$": CHARFN},
                   "additionalProperties": False},
        "diagonal": CHARFN,
        "global": CHARFN,
    },
}

REPORT = {
    "type": "object",
    "required": ["version", "command", "config", "timestamp", "results", "verdicts", "passed"],
    "properties": {
        "version": {"type": "string"},
        "command": {"type": "string"},
        "config": {"type": "object"},
        "timestamp": {"type": "string"},
        "results": {"type": ["object", "array"]},
        "verdicts": {"type": "object", "additionalProperties": {"type": "boolean"}},
        "passed": {"type": "boolean"},
    },
}


def pointer(path):
    """JSON pointer for a jsonschema error path."""
    return "/" + "/".join(str(p).replace("~", "~0").replace("/", "~1") for p in path) if path else ""


def validate(instance, schema, what="input"):
    """Raise SchemaError with a JSON pointer on the first schema violation."""
    v = jsonschema.Draft202012Validator(schema)
    err = jsonschema.exceptions.best_match(v.iter_errors(instance))
    if err is not None:
        ptr = pointer(err.absolute_path)
        raise SchemaError("%s invalid at %s: %s" % (what, ptr or "/", err.message), pointer=ptr)
    return instance
