"""JSON Schema (draft 2020-12) for ``wdcalc --json`` output.

``docs/output_schema.json`` is this dictionary dumped with indent 2.
"""

from __future__ import annotations

RATIONAL = {"type": "string", "pattern": r"^-?[0-9]+(/2)?$"}
SHAPE = {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2, "maxItems": 2}


def _obj(props: dict, required=None, extra=False) -> dict:
    return {
        "type": "object",
        "properties": props,
        "required": list(props) if required is None else required,
        "additionalProperties": extra,
    }


DEFS = {
    "rational": RATIONAL,
    "shape": SHAPE,
    "sl2sum": _obj({
        "irreducibles": {"type": "array", "items": _obj({
            "k": {"type": "integer", "minimum": 1},
            "mult": {"type": "integer", "minimum": 1},
        })},
        "dim": {"type": "integer", "minimum": 0},
        "text": {"type": "string"},
    }),
    "atom": _obj({
        "kind": {"enum": ["Std", "Ext2", "Sym2", "Pair"]},
        "tau": {"type": "string"},
        "other": {"type": "string"},
        "text": {"type": "string"},
    }, required=["kind", "tau", "text"]),
    "lfactor": _obj({
        "atom": {"$ref": "#/$defs/atom"},
        "shift": {"$ref": "#/$defs/rational"},
        "mult": {"type": "integer", "minimum": 1},
        "text": {"type": "string"},
    }),
    "lexpr": _obj({
        "factors": {"type": "array", "items": {"$ref": "#/$defs/lfactor"}},
        "text": {"type": "string"},
    }),
    "euler": _obj({
        "roots": {"type": "array", "items": _obj({
            "c": {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"},
            "m": {"type": "integer"},
            "text": {"type": "string"},
        })},
        "polynomial": {"type": "string"},
        "text": {"type": "string"},
    }),
    "segment": _obj({
        "rho": {"type": "string"},
        "dim": {"type": "integer", "minimum": 1},
        "a": {"$ref": "#/$defs/rational"},
        "b": {"$ref": "#/$defs/rational"},
    }),
    "rep": {
        "oneOf": [
            _obj({
                "kind": {"const": "discrete"},
                "rho": {"type": "string"},
                "dim": {"type": "integer", "minimum": 1},
                "k": {"type": "integer", "minimum": 1},
            }),
            _obj({
                "kind": {"const": "generic"},
                "segments": {"type": "array", "items": {"$ref": "#/$defs/segment"}, "minItems": 1},
            }),
        ]
    },
    "certificate": _obj({
        "rule": {"enum": ["Induction", "Recurse", "HomZero", "Vacuous", "BaseCuspidal", "BaseSmallN"]},
        "shape": {"$ref": "#/$defs/shape"},
        "rep": {"$ref": "#/$defs/rep"},
        "index": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "steps": {"type": "integer", "minimum": 1},
        "reduced": {"$ref": "#/$defs/shape"},
        "children": {"type": "array", "items": {"$ref": "#/$defs/certificate"}},
    }, required=["rule", "shape"]),
}


def _command(name: str, props: dict, required: list[str], with_input: bool = True) -> dict:
    base = {"command": {"const": name}}
    if with_input:
        base["input"] = {"type": "string"}
    return _obj({**base, **props}, required=list(base) + required)


COMMANDS = {
    "plethysm": _command("plethysm", {
        "op": {"enum": ["sym2", "ext2", "tensor"]},
        "result": {"$ref": "#/$defs/sl2sum"},
    }, ["op", "result"], with_input=False),
    "ext2": _command("ext2", {
        "atoms": {"type": "array", "items": _obj({
            "base": {"$ref": "#/$defs/atom"},
            "k": {"type": "integer", "minimum": 1},
            "shift": {"$ref": "#/$defs/rational"},
            "mult": {"type": "integer", "minimum": 1},
            "text": {"type": "string"},
        })},
        "dim": {"type": "integer", "minimum": 0},
    }, ["atoms", "dim"]),
    "lfactor": _command("lfactor", {
        "lexpr": {"$ref": "#/$defs/lexpr"},
        "euler": {"$ref": "#/$defs/euler"},
    }, ["lexpr"]),
    "poles": _command("poles", {
        "lexpr": {"$ref": "#/$defs/lexpr"},
        "query": _obj({
            "at": {"$ref": "#/$defs/rational"},
            "has_pole": {"type": "boolean"},
            "witnesses": {"type": "array", "items": {"$ref": "#/$defs/lfactor"}},
            "text": {"type": "string"},
        }),
    }, ["lexpr", "query"]),
    "filtration": _command("filtration", {
        "n": {"type": "integer", "minimum": 1},
        "count": {"type": "integer", "minimum": 0},
        "factors": {"type": "array", "items": _obj({
            "phi_power": {"type": "integer", "minimum": 0},
            "tau": {"oneOf": [{"type": "null"}, {"type": "array", "items": {"$ref": "#/$defs/segment"}}]},
            "extra_twist": {"oneOf": [{"type": "null"}, {"type": "array", "items": {"$ref": "#/$defs/rational"}}]},
            "orders": {"type": "array", "items": {"type": "integer", "minimum": 0}},
            "multiplicity": {"type": "integer", "minimum": 1},
            "text": {"type": "string"},
        })},
    }, ["n", "count", "factors"]),
    "levi": _command("levi", {
        "kind": {"enum": ["discrete", "generic"]},
        "n": {"type": "integer", "minimum": 1},
        "rep": {"$ref": "#/$defs/rep"},
        "shapes": {"type": "array", "items": _obj({
            "shape": {"$ref": "#/$defs/shape"},
            "excluded": {"type": "boolean"},
            "status": {"type": "string"},
            "certificate": {"$ref": "#/$defs/certificate"},
        }, required=["shape", "excluded", "status"])},
        "candidates": {"type": "array", "items": {"$ref": "#/$defs/shape"}},
    }, ["kind", "n", "shapes", "candidates"]),
    "shalika": _command("shalika", {
        "has_model": {"type": "boolean"},
        "models": {"type": "array", "items": {"type": "string"}},
        "reason": {"type": "string"},
        "witnesses": {"type": "array", "items": {"$ref": "#/$defs/lfactor"}},
        "text": {"type": "string"},
    }, ["has_model", "models", "reason", "witnesses", "text"]),
}

OUTPUT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "wdcalc --json output",
    "oneOf": list(COMMANDS.values()),
    "$defs": DEFS,
}

CATALOG_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "wdcalc cuspidal catalog",
    "type": "array",
    "items": _obj({
        "name": {"type": "string", "pattern": r"^[A-Za-z_][A-Za-z0-9_]*$"},
        "dim": {"type": "integer", "minimum": 1},
        "unitary": {"type": "boolean"},
        "self_dual": {"enum": ["sym2", "ext2", "none"]},
        "std_pole_shifts": {"type": "array", "items": RATIONAL},
        "explicit": _obj({
            "c": {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"},
            "m": {"type": "integer"},
        }, required=["c"]),
    }, required=["name", "dim"]),
}


def command_schema(name: str) -> dict:
    return {"$schema": OUTPUT_SCHEMA["$schema"], **COMMANDS[name], "$defs": DEFS}
