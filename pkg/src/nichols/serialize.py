"""
JSON braiding specs and output schemas.

Braiding specs:
  {"kind": "diagonal", "mode": "root_of_unity", "order": N, "exponents": [[...]]}
  {"kind": "diagonal", "mode": "generic", "exponents": [[...]]}
  {"kind": "matrix", "dim": d, "order": N, "entries": [[...]], "labels": [...], "grading": "abelian"|"group"}
  {"kind": "group_yd", "generators": [[...]], "class_rep": [...],
   "character": {"order": N, "values": [[perm, exponent], ...]}}
  group_yd may give "summands": [{"class_rep": ..., "character": ...}, ...] instead.
Permutations are 1-based one-line arrays.  Matrix entries are an integer,
{"zeta": k} (meaning zeta_N^k) or a cyclotomic object {"order", "coeffs"}.
"""

from __future__ import annotations

import json

from .braiding import DiagonalBraiding, MatrixBraiding
from .cyclotomic import Cyclotomic, embed_order
from .errors import SpecError
from .groups import PermutationGroup, build_yd_braiding, build_yd_sum


def _perm0(p):
    p = [int(x) for x in p]
    if sorted(p) != list(range(1, len(p) + 1)):
        raise SpecError(f"{p} is not a permutation in one-line notation")
    return tuple(x - 1 for x in p)


def _entry(x, order):
    if isinstance(x, bool):
        raise SpecError("boolean matrix entry")
    if isinstance(x, int):
        return Cyclotomic.from_rational(order, x)
    if isinstance(x, str):
        from fractions import Fraction
        return Cyclotomic.from_rational(order, Fraction(x))
    if isinstance(x, dict) and "zeta" in x:
        return Cyclotomic.zeta(order, int(x["zeta"]))
    if isinstance(x, dict) and "coeffs" in x:
        c = Cyclotomic.from_json(x)
        if order % c.order:
            raise SpecError(f"entry of order {c.order} does not embed in order {order}")
        return embed_order(c, order)
    raise SpecError(f"cannot read matrix entry {x!r}")


def _character(group, data):
    order = int(data["order"])
    vals = {}
    for perm, exp in data["values"]:
        vals[_perm0(perm)] = Cyclotomic.zeta(order, int(exp))
    if not vals:
        vals[group.identity] = Cyclotomic.one(order)
    return vals


def parse_braiding(spec):
    if isinstance(spec, str):
        spec = json.loads(spec)
    if not isinstance(spec, dict) or "kind" not in spec:
        raise SpecError("braiding spec must be an object with a 'kind'")
    kind = spec["kind"]
    try:
        if kind == "diagonal":
            mode = spec.get("mode", "root_of_unity")
            if mode == "generic":
                return DiagonalBraiding(spec["exponents"], mode="generic")
            if mode != "root_of_unity":
                raise SpecError(f"unknown mode {mode!r}")
            return DiagonalBraiding(spec["exponents"], order=int(spec["order"]))
        if kind == "matrix":
            order = int(spec.get("order", 1))
            mat = [[_entry(x, order) for x in row] for row in spec["entries"]]
            d = int(spec.get("dim", round(len(mat) ** 0.5)))
            if len(mat) != d * d:
                raise SpecError("entries must form a dim^2 x dim^2 matrix")
            labels = spec.get("labels")
            grading = spec.get("grading", "abelian")
            if labels is not None and grading == "group":
                labels = [_perm0(l) for l in labels]
            return MatrixBraiding(mat, order, labels=labels, grading=grading)
        if kind == "group_yd":
            group = PermutationGroup([_perm0(g) for g in spec["generators"]])
            if "summands" in spec:
                summands = [(_perm0(s["class_rep"]), _character(group, s["character"]))
                            for s in spec["summands"]]
                return build_yd_sum(group, summands)
            return build_yd_braiding(group, _perm0(spec["class_rep"]),
                                     _character(group, spec["character"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecError(f"malformed {kind} spec: {exc}") from exc
    raise SpecError(f"unknown braiding kind {kind!r}")


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


# --- schemas ---------------------------------------------------------------------

_int_matrix = {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}}
_cyclotomic = {
    "type": "object",
    "required": ["order", "coeffs"],
    "properties": {
        "order": {"type": "integer", "minimum": 1},
        "coeffs": {"type": "array", "items": {
            "type": "array", "minItems": 2, "maxItems": 2,
            "items": {"type": "string", "pattern": "^-?[0-9]+$"}}},
    },
}
_laurent = {"type": "object", "required": ["laurent"],
            "properties": {"laurent": {"type": "array"}}}
_ratfun = {"type": "object", "required": ["num", "den"]}
_scalar = {"anyOf": [_cyclotomic, _laurent, _ratfun, {"type": "string"}]}

BRAIDING_SCHEMA = {
    "type": "object",
    "required": ["kind"],
    "oneOf": [
        {"properties": {"kind": {"const": "diagonal"}, "mode": {"const": "root_of_unity"},
                        "order": {"type": "integer", "minimum": 1}, "exponents": _int_matrix},
         "required": ["kind", "mode", "order", "exponents"]},
        {"properties": {"kind": {"const": "diagonal"}, "mode": {"const": "generic"},
                        "exponents": _int_matrix},
         "required": ["kind", "mode", "exponents"]},
        {"properties": {"kind": {"const": "matrix"}, "dim": {"type": "integer"},
                        "order": {"type": "integer"}, "entries": {"type": "array"}},
         "required": ["kind", "entries"]},
        {"properties": {"kind": {"const": "group_yd"}, "generators": _int_matrix},
         "required": ["kind", "generators"]},
    ],
}

BLOCK_SCHEMA = {
    "type": "object",
    "required": ["degree", "dim", "rank"],
    "properties": {"dim": {"type": "integer", "minimum": 0},
                   "rank": {"type": "integer", "minimum": 0}},
}

HILBERT_SCHEMA = {
    "type": "object",
    "required": ["dims", "terminated", "total", "blocks"],
    "properties": {
        "dims": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "terminated": {"type": "boolean"},
        "total": {"type": ["integer", "null"]},
        "blocks": {"type": "array", "items": BLOCK_SCHEMA},
        "factors": {"type": ["array", "null"]},
        "probabilistic": {"type": "boolean"},
    },
}

CARTAN_SCHEMA = {
    "type": "object",
    "required": ["cartan"],
    "properties": {"cartan": _int_matrix, "cases": {"type": "array"}},
}

REFLECT_SCHEMA = {
    "type": "object",
    "required": ["index", "braiding", "q_diagram"],
    "properties": {"index": {"type": "integer", "minimum": 1}, "braiding": BRAIDING_SCHEMA,
                   "q_diagram": {"type": "string"}},
}

GROUPOID_SCHEMA = {
    "type": "object",
    "required": ["rank", "status", "objects", "edges"],
    "properties": {
        "status": {"enum": ["finite", "infinite", "not_i_finite"]},
        "objects": {"type": "array", "items": {
            "type": "object", "required": ["id", "cartan"],
            "properties": {"cartan": {"anyOf": [_int_matrix, {"type": "null"}]}}}},
        "edges": {"type": "array", "items": {"type": "object",
                                             "required": ["from", "reflection", "to"]}},
    },
}

ROOTS_SCHEMA = {
    "type": "object",
    "required": ["status", "positive", "count"],
    "properties": {"positive": _int_matrix, "count": {"type": "integer"},
                   "violations": {"type": "array", "items": {"type": "string"}},
                   "crystallographic": {"type": "boolean"}},
}

RELATIONS_SCHEMA = {
    "type": "object",
    "required": ["degree", "relations"],
    "properties": {
        "degree": {"type": "integer"},
        "relations": {"type": "array", "items": {
            "type": "object", "additionalProperties": _scalar,
            "propertyNames": {"pattern": "^[0-9]+(,[0-9]+)*$"}}},
    },
}

RANK2_SCHEMA = {
    "type": "object",
    "required": ["command"],
    "properties": {"command": {"enum": ["enumerate", "check", "roots", "triangulation", "match"]}},
}

VERIFY_SCHEMA = {
    "type": "object",
    "required": ["fixture", "passed", "checks"],
    "properties": {"passed": {"type": "boolean"},
                   "checks": {"type": "array", "items": {
                       "type": "object", "required": ["name", "expected", "actual", "ok"]}}},
}

SCHEMAS = {
    "braiding": BRAIDING_SCHEMA,
    "hilbert": HILBERT_SCHEMA,
    "cartan": CARTAN_SCHEMA,
    "reflect": REFLECT_SCHEMA,
    "weylgroupoid": GROUPOID_SCHEMA,
    "roots": ROOTS_SCHEMA,
    "relations": RELATIONS_SCHEMA,
    "rank2": RANK2_SCHEMA,
    "verify": VERIFY_SCHEMA,
}
