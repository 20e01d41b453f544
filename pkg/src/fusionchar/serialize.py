"""JSON encoding of exact values.

A cyclotomic number becomes ``{"e": e, "coeffs": [[num, den], ...]}`` with
coordinates in the power basis; values that are integers collapse to plain
JSON numbers. Permutations are written in one-based cycle notation.
"""

from __future__ import annotations

import json
from fractions import Fraction
from numbers import Integral, Rational

import numpy as np

from .exact.cyclotomic import Cyclotomic
from .perm_group import Permutation


def encode(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Permutation):
        return str(obj)
    if isinstance(obj, Integral):
        return int(obj)
    if isinstance(obj, Rational):
        q = Fraction(obj)
        if q.denominator == 1:
            return q.numerator
        return {"e": 1, "coeffs": [[q.numerator, q.denominator]]}
    if isinstance(obj, Cyclotomic):
        q = obj.to_rational()
        if q is not None and Fraction(q).denominator == 1:
            return int(q)
        coeffs = [Fraction(c) for c in obj.coeffs]
        return {"e": obj.e, "coeffs": [[c.numerator, c.denominator] for c in coeffs]}
    if isinstance(obj, np.ndarray):
        return [encode(x) for x in obj.tolist()]
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(x) for x in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(encode(x) for x in obj)
    raise TypeError(f"cannot encode {type(obj).__name__}")


def decode_cyclotomic(data) -> Cyclotomic:
    if isinstance(data, int):
        return Cyclotomic.rational(data)
    return Cyclotomic(data["e"], [Fraction(n, d) for n, d in data["coeffs"]])


def dumps(obj) -> str:
    return json.dumps(encode(obj), indent=2, sort_keys=True)


def table_to_dict(table) -> dict:
    G = table.group
    return {
        "conductor": table.conductor,
        "class_representatives": [c.representative for c in G.conjugacy_classes],
        "class_sizes": [c.size for c in G.conjugacy_classes],
        "irreducibles": [list(chi.values) for chi in table.irr],
    }
