"""JSON Schemas (draft 2020-12) for the ``--json`` reports of each command.

Kept as plain dictionaries so the package itself needs no validator.
"""

_ints = {"type": "array", "items": {"type": "integer"}}
_nat = {"type": "integer", "minimum": 0}
_index_sets = {"type": "array", "items": {"type": "array", "items": _nat}}


def _obj(props: dict, required=None) -> dict:
    return {"type": "object", "properties": props,
            "required": list(props) if required is None else required}


def _nullable(s: dict) -> dict:
    return {"anyOf": [s, {"type": "null"}]}


VERDICT = _obj({"pass": {"type": "boolean"}, "first_failure": _nullable({"type": "integer"})})

LCS = _obj({"lhs": _ints, "rhs": _nullable(_ints), "pass": _nullable({"type": "boolean"})})

KERNEL = _obj({
    "horizontal": _ints, "phi_A": _ints, "phi_B": _ints, "kernel_dims": _ints,
    "quotient_dims": _ints, "free_dims": _ints,
    "bracket_ok": {"type": "array", "items": {"type": "boolean"}},
    "dims_match": {"type": "boolean"}, "free": {"type": "boolean"},
    "almost_direct": {"type": "boolean"}, "pass": {"type": "boolean"},
})

LATTICE = _obj({
    "dim": _nat, "n": _nat, "rank": _nat,
    "flats": {"type": "array", "items": _obj({"rank": _nat, "closure": {"type": "array", "items": _nat}})},
    "supersolvable": {"type": "boolean"},
    "modular_chain": _nullable(_index_sets),
    "exponents": _nullable(_ints),
})

HYPERSOLVABLE = _obj({
    "hypersolvable": {"type": "boolean"},
    "series": _nullable(_index_sets),
    "extension_kinds": _nullable({"type": "array",
                                  "items": {"enum": ["SINGULAR", "NONSINGULAR"]}}),
    "exponents": _nullable(_ints),
    "ell": _nullable(_nat),
    "s": _nullable(_nat),
})

HOLONOMY = _obj({
    "n": _nat, "N": {"type": "integer", "minimum": 1},
    "phi": _ints, "ideal_dims": _ints,
    "lcs_check": LCS,
    "decomposition_check": _nullable(VERDICT),
    "kernel_report": _nullable(KERNEL),
})

VERIFY = _obj({
    "status": {"enum": ["PASS", "FAIL", "NOT_APPLICABLE"]},
    "n": _nat, "N": {"type": "integer", "minimum": 1}, "rank": _nat,
    "supersolvable": {"type": "boolean"}, "hypersolvable": {"type": "boolean"},
    "chain_exponents": _nullable(_ints), "series_exponents": _nullable(_ints),
    "exponent_source": _nullable({"enum": ["supersolvable", "hypersolvable"]}),
    "exponents": _nullable(_ints),
    "phi": _ints, "ideal_dims": _ints,
    "lcs_check": _nullable(LCS),
    "decomposition_check": _nullable(VERDICT),
})

DEFORM = {
    "oneOf": [
        _obj({"status": {"const": "NOT_HYPERSOLVABLE"}}),
        _obj({
            "status": {"const": "OK"}, "s": _nat, "seed": {"type": "integer"},
            "offsets": {"type": "array", "items": _ints},
            "dim": _nat, "rank2_preserved": {"type": "boolean"},
            "supersolvable": {"type": "boolean"}, "rank": _nat,
            "exponents": _nullable(_ints),
            "arrangement": _nullable({"type": "string"}),
            "written": {"type": "array", "items": {"type": "string"}},
        }, required=["status", "s", "seed", "offsets", "dim", "rank2_preserved",
                     "supersolvable", "rank", "exponents", "arrangement"]),
    ]
}

SIDECAR = _obj({"seed": {"type": "integer"}, "offsets": {"type": "array", "items": _ints}})

REPORTS = {
    "lattice": LATTICE,
    "supersolvable": LATTICE,
    "hypersolvable": HYPERSOLVABLE,
    "holonomy": HOLONOMY,
    "verify": VERIFY,
    "deform": DEFORM,
}


def schema_for(command: str) -> dict:
    return {"$schema": "https://json-schema.org/draft/2020-12/schema", **REPORTS[command]}
