"""JSON schemas for the command-line output, used only by the tests."""

SCALAR = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
POLY = {"type": "string", "minLength": 1}
MATRIX_2 = {"type": "array", "items": {"type": "array", "items": SCALAR}}

IDEAL = {
    "type": "object",
    "required": ["ring", "gens"],
    "properties": {
        "ring": {
            "type": "object",
            "required": ["vars", "field", "order"],
            "properties": {
                "vars": {"type": "array", "items": {"type": "string"}},
                "field": {"type": "string", "pattern": r"^(Q|Fp:\d+)$"},
                "order": {"enum": ["lex", "grevlex"]},
            },
        },
        "gens": {"type": "array", "items": POLY},
    },
}

CHART_FIELDS = {
    "d": {"type": "integer", "minimum": 1},
    "r": {"type": "integer", "minimum": 2},
    "chart": {"type": "array", "items": {"type": "integer", "minimum": 1}, "minItems": 1},
}

FRAME = {
    "type": "object",
    "required": ["gl2", "glr"],
    "properties": {"gl2": MATRIX_2, "glr": MATRIX_2},
}

POINT = {
    "type": "object",
    "required": ["d", "r", "chart", "frame", "params"],
    "properties": {
        **CHART_FIELDS,
        "frame": FRAME,
        "params": {
            "type": "object",
            "patternProperties": {r"^w_\d+_\d+$": SCALAR},
            "additionalProperties": False,
        },
        "field": {"type": "string"},
    },
}

BINARY_FORM = {
    "type": "object",
    "required": ["d", "coeffs"],
    "properties": {"d": {"type": "integer"}, "coeffs": {"type": "array", "items": SCALAR}},
}

CHART_IDEAL = {
    "type": "object",
    "required": ["d", "r", "chart", "t", "reduced", "ideal"],
    "properties": {**CHART_FIELDS, "t": {"type": "integer"}, "reduced": {"type": "boolean"}, "ideal": IDEAL},
}

REDUCED_EQS = {
    "type": "object",
    "required": ["d", "r", "chart", "reduced", "ideal"],
    "properties": {**CHART_FIELDS, "reduced": {"type": "boolean"}, "ideal": IDEAL},
}

CHAR_POLY = {
    "type": "object",
    "required": ["coeffs", "poly"],
    "properties": {"coeffs": {"type": "array", "items": POLY}, "poly": POLY, "point": POINT},
}

XI_MAP = {
    "type": "object",
    "required": ["d", "r", "chart", "coords"],
    "properties": {**CHART_FIELDS, "coords": {"type": "array", "items": POLY}},
}

PLUECKER = {
    "type": "object",
    "required": ["count", "minors"],
    "properties": {
        "count": {"type": "integer"},
        "minors": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["columns", "value"],
                "properties": {"columns": {"type": "array", "items": {"type": "integer"}}, "value": SCALAR},
            },
        },
    },
}

FIBER = {
    "type": "object",
    "required": ["components", "profile"],
    "properties": {
        "components": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["root", "form", "multiplicity", "point"],
                "properties": {
                    "root": {"type": "array", "items": SCALAR, "minItems": 2, "maxItems": 2},
                    "form": POLY,
                    "multiplicity": {"type": "integer", "minimum": 1},
                    "point": POINT,
                },
            },
        },
        "profile": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["root", "algebraic", "corank", "flagged"],
                "properties": {
                    "root": POLY,
                    "algebraic": {"type": "integer"},
                    "corank": {"type": "integer"},
                    "flagged": {"type": "boolean"},
                },
            },
        },
    },
}

TANGENT = {
    "type": "object",
    "required": ["ideal", "point", "jacobian_rank", "tangent_dim", "krull_dim", "verdict"],
    "properties": {
        "ideal": IDEAL,
        "point": {"type": "object", "additionalProperties": SCALAR},
        "jacobian_rank": {"type": "integer", "minimum": 0},
        "tangent_dim": {"type": "integer", "minimum": 0},
        "krull_dim": {"type": "integer", "minimum": 0},
        "verdict": {"enum": ["smooth", "singular"]},
    },
}

COMPONENT = {
    "type": "object",
    "required": ["point", "component"],
    "properties": {
        "point": {"type": "object", "additionalProperties": SCALAR},
        "component": {"enum": ["none", "isolated", "embedded"]},
    },
}

REPORT = {
    "type": "object",
    "required": ["max_d", "field", "passed", "failed", "skipped", "claims"],
    "properties": {
        "max_d": {"type": "integer", "minimum": 2},
        "field": {"type": "string"},
        "passed": {"type": "integer"},
        "failed": {"type": "integer"},
        "skipped": {"type": "integer"},
        "claims": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "anchor", "status", "elapsed", "budget", "details"],
                "properties": {
                    "id": {"type": "string", "pattern": r"^AC\d+$"},
                    "anchor": {"type": "string"},
                    "status": {"enum": ["pass", "fail", "skipped"]},
                    "elapsed": {"type": "number", "minimum": 0},
                    "budget": {"type": "number"},
                    "details": {"type": "array", "items": {"type": "string"}},
                },
            },
        },
    },
}
