"""JSON descriptors for groups, actions, fibres, graphs, presentations and fibre-product specs.

Every document is validated against a JSON schema (also written to
``docs/schemas``) before it is interpreted; failures raise
:class:`DescriptorError` carrying the JSON path of the fault.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import jsonschema

from .actions import (GroupAction, coset_action, dinf_on_z, houghton_action, natural_action,
                      regular_action, thompson_dyadic_action, z_regular)
from .dyadic import Dyadic
from .errors import DescriptorError
from .finite import CATALOGUE, FiniteGroup, alternating_group, cyclic_group, dihedral_group, symmetric_group
from .groups import DINF_A, DINF_B, Cyclic, Perm, ZInt, evaluate_word
from .words import Word

_WORD = {"type": "string"}

GROUP_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "group descriptor",
    "type": "object",
    "required": ["kind"],
    "properties": {
        "kind": {"enum": ["sym", "alt", "cyclic", "dihedral", "named", "perm", "int", "dihedral_inf",
                          "thompson_f", "houghton"]},
        "n": {"type": "integer", "minimum": 1},
        "name": {"enum": sorted(CATALOGUE)},
        "degree": {"type": "integer", "minimum": 1},
        "generators": {"type": "object", "additionalProperties": {
            "type": "array", "items": {"type": "integer", "minimum": 0}}},
    },
    "allOf": [
        {"if": {"properties": {"kind": {"enum": ["sym", "alt", "cyclic", "dihedral"]}}},
         "then": {"required": ["n"]}},
        {"if": {"properties": {"kind": {"const": "houghton"}}},
         "then": {"required": ["n"], "properties": {"n": {"minimum": 2}}}},
        {"if": {"properties": {"kind": {"const": "named"}}}, "then": {"required": ["name"]}},
        {"if": {"properties": {"kind": {"const": "perm"}}}, "then": {"required": ["degree", "generators"]}},
    ],
}

ACTION_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "action descriptor",
    "type": "object",
    "required": ["group"],
    "properties": {
        "group": {"$ref": "#/$defs/group"},
        "action": {"enum": ["default", "natural", "regular", "cosets"]},
        "subgroup": {"type": "array", "items": _WORD},
        "base_points": {"type": "array"},
    },
    "$defs": {"group": {k: v for k, v in GROUP_SCHEMA.items() if k != "$schema"}},
}

GRAPH_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "vertex graph",
    "type": "object",
    "required": ["vertices", "edges"],
    "properties": {
        "vertices": {"type": "integer", "minimum": 0},
        "edges": {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 0},
                                             "minItems": 2, "maxItems": 2}},
        "labels": {"type": "array", "items": {"type": "string", "pattern": r"^(C\d+|Z|Dinf|Sym3|Sym4|D4|C2xC2|trivial|1)$"}},
    },
}

SEQUENCE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "graph sequence",
    "type": "object",
    "required": ["graphs", "partition"],
    "properties": {
        "graphs": {"type": "array", "items": {"$ref": "#/$defs/graph"}},
        "partition": {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}},
    },
    "$defs": {"graph": {k: v for k, v in GRAPH_SCHEMA.items() if k != "$schema"}},
}

_LETTER = {"oneOf": [{"type": "string"},
                     {"type": "object", "required": ["sym"],
                      "properties": {"sym": {"type": "string"}, "inv": {"type": "boolean"}},
                      "additionalProperties": False}]}

PRESENTATION_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "group presentation",
    "type": "object",
    "required": ["generators", "relators"],
    "properties": {
        "generators": {"type": "array", "items": {"type": "string"}, "uniqueItems": True},
        "relators": {"type": "array", "items": {"type": "array", "items": _LETTER}},
        "tags": {"type": "array", "items": {"type": "string"}},
    },
}

FIBRE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "fibre product spec",
    "type": "object",
    "required": ["g1", "g2"],
    "properties": {
        "g1": {"enum": sorted(CATALOGUE)},
        "g2": {"enum": sorted(CATALOGUE)},
        "kernel1": {"type": "array", "items": _WORD},
        "kernel2": {"type": "array", "items": _WORD},
    },
}

WREATH_ELEMENT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "wreath element",
    "type": "object",
    "properties": {
        "f": {"type": "array", "items": {"type": "array", "minItems": 2, "maxItems": 2,
                                         "prefixItems": [{}, _WORD]}},
        "c": _WORD,
    },
}

SCHEMAS = {"group": GROUP_SCHEMA, "action": ACTION_SCHEMA, "graph": GRAPH_SCHEMA,
           "graph_sequence": SEQUENCE_SCHEMA, "presentation": PRESENTATION_SCHEMA,
           "fibre": FIBRE_SCHEMA, "wreath_element": WREATH_ELEMENT_SCHEMA}


def _path(err) -> str:
    return "$" + "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in err.absolute_path)


def validate(doc: Any, schema_name: str) -> Any:
    schema = SCHEMAS[schema_name]
    validator = jsonschema.Draft202012Validator(schema)
    err = jsonschema.exceptions.best_match(validator.iter_errors(doc))
    if err is not None:
        raise DescriptorError(_path(err), err.message)
    return doc


def write_schemas(directory: str | Path) -> list[Path]:
    out = []
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    for name, schema in SCHEMAS.items():
        p = d / f"{name}.schema.json"
        p.write_text(json.dumps(schema, indent=2, sort_keys=True) + "\n")
        out.append(p)
    return out


# ---------------------------------------------------------------------------
# shorthands used on the command line

SHORTHANDS = {
    "sym3": {"kind": "sym", "n": 3}, "sym4": {"kind": "sym", "n": 4},
    "alt4": {"kind": "alt", "n": 4}, "d4": {"kind": "dihedral", "n": 4},
    "c2": {"kind": "cyclic", "n": 2}, "c3": {"kind": "cyclic", "n": 3}, "c4": {"kind": "cyclic", "n": 4},
    "c2xc2": {"kind": "named", "name": "C2xC2"},
    "z": {"kind": "int"}, "dinf": {"kind": "dihedral_inf"}, "thompson": {"kind": "thompson_f"},
    "h3": {"kind": "houghton", "n": 3},
}


def resolve(ref: str) -> dict:
    """A shorthand name, an inline JSON document, or a path to a JSON file."""
    if ref.lower() in SHORTHANDS:
        return dict(SHORTHANDS[ref.lower()])
    text = ref
    if not ref.lstrip().startswith(("{", "[")):
        try:
            text = Path(ref).read_text()
        except OSError as exc:
            raise DescriptorError("$", f"cannot read {ref!r}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DescriptorError("$", f"invalid JSON: {exc.msg} at line {exc.lineno}") from None


def load_finite_group(doc: dict) -> FiniteGroup:
    validate(doc, "group")
    kind = doc["kind"]
    if kind == "sym":
        return symmetric_group(doc["n"])
    if kind == "alt":
        if doc["n"] < 3:
            raise DescriptorError("$.n", "alternating groups need n >= 3")
        return alternating_group(doc["n"])
    if kind == "cyclic":
        return cyclic_group(doc["n"])
    if kind == "dihedral":
        if doc["n"] < 3:
            raise DescriptorError("$.n", "dihedral groups need n >= 3")
        return dihedral_group(doc["n"])
    if kind == "named":
        return CATALOGUE[doc["name"]]()
    if kind == "perm":
        n = doc["degree"]
        gens = {}
        for s, imgs in doc["generators"].items():
            try:
                gens[s] = Perm(tuple(imgs))
                if gens[s].degree != n:
                    raise ValueError(f"degree {gens[s].degree} != {n}")
            except ValueError as exc:
                raise DescriptorError(f"$.generators.{s}", str(exc)) from None
        if not gens:
            raise DescriptorError("$.generators", "at least one generator is required")
        return FiniteGroup(gens, name="perm")
    raise DescriptorError("$.kind", f"{kind!r} is not a finite group")


def is_finite_kind(doc: dict) -> bool:
    return doc.get("kind") in ("sym", "alt", "cyclic", "dihedral", "named", "perm")


def load_action(doc: dict) -> GroupAction:
    """An action descriptor, or a bare group descriptor (its default action)."""
    if "group" not in doc:
        doc = {"group": doc}
    validate(doc, "action")
    g = doc["group"]
    how = doc.get("action", "default")
    if not is_finite_kind(g):
        if how not in ("default",):
            raise DescriptorError("$.action", f"{g['kind']} supports only its default action")
        return {"int": z_regular, "dihedral_inf": dinf_on_z, "thompson_f": thompson_dyadic_action,
                "houghton": lambda: houghton_action(g["n"])}[g["kind"]]()
    G = load_finite_group(g)
    if how == "regular" or (how == "default" and g["kind"] == "cyclic"):
        return regular_action(G)
    if how == "cosets":
        words = doc.get("subgroup", [])
        H = G.subgroup([evaluate_word(_word(w, f"$.subgroup[{i}]"), G.generators, G.identity)
                        for i, w in enumerate(words)])
        return coset_action(G, H)
    if not isinstance(G.identity, Perm):
        raise DescriptorError("$.action", "natural action needs a permutation group")
    act = natural_action(G)
    if "base_points" in doc:
        pts = tuple(doc["base_points"])
        if any(p not in act.domain for p in pts):
            raise DescriptorError("$.base_points", "base point outside the domain")
        act.base_points = pts
    return act


def _word(text: str, path: str) -> Word:
    try:
        return Word.parse(text)
    except ValueError as exc:
        raise DescriptorError(path, str(exc)) from None


def load_fiber(doc: dict) -> dict:
    """Generators of the fibre group W, keyed by symbol."""
    validate(doc, "group")
    kind = doc["kind"]
    if kind == "int":
        return {"t": ZInt(1)}
    if kind == "dihedral_inf":
        return {"a": DINF_A, "b": DINF_B}
    if kind == "cyclic":
        return {"t": Cyclic(1, doc["n"])}
    if is_finite_kind(doc):
        return dict(load_finite_group(doc).generators)
    raise DescriptorError("$.kind", f"{kind!r} cannot be used as a fibre")


def parse_point(action: GroupAction, raw, path: str = "$"):
    """Points: integers, dyadic strings "3/8", [ray, k] pairs, or words for regular actions."""
    if isinstance(raw, list) and len(raw) == 2:
        raw = tuple(raw)
    elif isinstance(raw, str) and "/" in raw:
        try:
            raw = Dyadic.parse(raw)
        except ValueError as exc:
            raise DescriptorError(path, str(exc)) from None
    elif isinstance(raw, str) and action.group is not None and action.act_fn is not None:
        raw = evaluate_word(_word(raw, path), action.generators, action.identity)
    if raw not in action.domain:
        raise DescriptorError(path, f"{raw!r} is not a point of {action.domain.name}")
    return raw


def parse_element(text: str, gens: dict, identity, path: str = "$"):
    return evaluate_word(_word(text, path), gens, identity)
