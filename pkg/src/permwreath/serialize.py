"""Conversion of points, elements and reports to JSON-compatible values."""

from __future__ import annotations

import json
from fractions import Fraction

from .dyadic import Dyadic


def jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, (int, str, float)):
        return x
    if isinstance(x, (Dyadic, Fraction)):
        return str(x)
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, (tuple, list)):
        return [jsonable(y) for y in x]
    if isinstance(x, (set, frozenset)):
        return sorted((jsonable(y) for y in x), key=repr)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    raise TypeError(f"cannot serialise {type(x).__name__}")


def dumps(doc) -> str:
    """Deterministic JSON text: sorted keys, fixed separators."""
    return json.dumps(jsonable(doc), sort_keys=True, indent=2)
