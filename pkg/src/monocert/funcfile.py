"""JSON files describing functions, as consumed by the command line.

Schema: an object with "n" (positive integer), "repr" (one of "dnf",
"truth_table", "threshold", "indicator", "weighted_real"), and the
representation's payload:

    dnf            minterms: list of lists of 1-based coordinates
    truth_table    table: string of 2**n characters '0'/'1', entry t being
                   the value at the point whose bitmask is t
    threshold      k: integer
    indicator      k: integer, P: list of exactly k coordinates
    weighted_real  weights: list of n nonnegative numbers

Malformed input raises FormatError; the domain constructors' own errors
(dimension, monotonicity, capacity) pass through unchanged.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import FormatError
from .model import (
    MonotoneFunction,
    make_dnf,
    make_indicator,
    make_threshold,
    make_truth_table,
    make_weighted_real,
)

REPRS = ("dnf", "truth_table", "threshold", "indicator", "weighted_real")


def _require(obj: dict, key: str, types, what: str):
    if key not in obj:
        raise FormatError(f"missing field {key!r}")
    value = obj[key]
    if not isinstance(value, types) or isinstance(value, bool):
        raise FormatError(f"field {key!r} must be {what}")
    return value


def _int_list(value, what: str) -> list[int]:
    if not isinstance(value, list) or any(
            not isinstance(i, int) or isinstance(i, bool) for i in value):
        raise FormatError(f"{what} must be a list of integers")
    return value


def function_from_dict(obj) -> MonotoneFunction:
    """Build a function from a parsed JSON object."""
    if not isinstance(obj, dict):
        raise FormatError("function file must contain a JSON object")
    n = _require(obj, "n", int, "a positive integer")
    if n < 1:
        raise FormatError(f"field 'n' must be positive, got {n}")
    tag = _require(obj, "repr", str, "a string")
    if tag not in REPRS:
        raise FormatError(f"unknown repr {tag!r}; expected one of {', '.join(REPRS)}")
    if tag == "dnf":
        terms = obj.get("minterms")
        if not isinstance(terms, list):
            raise FormatError("field 'minterms' must be a list of lists")
        return make_dnf(n, [_int_list(t, "each minterm") for t in terms])
    if tag == "truth_table":
        table = _require(obj, "table", str, "a string of '0'/'1'")
        return make_truth_table(n, table)
    if tag == "threshold":
        return make_threshold(n, _require(obj, "k", int, "an integer"))
    if tag == "indicator":
        k = _require(obj, "k", int, "an integer")
        planted = _int_list(_require(obj, "P", list, "a list"), "field 'P'")
        return make_indicator(n, k, planted)
    weights = obj.get("weights")
    if not isinstance(weights, list) or any(
            isinstance(w, bool) or not isinstance(w, (int, float)) for w in weights):
        raise FormatError("field 'weights' must be a list of numbers")
    return make_weighted_real(n, weights)


def function_to_dict(f: MonotoneFunction) -> dict:
    """Serialize a constructor-built function back to the file schema."""
    p = f.payload
    if f.tag == "dnf":
        terms = [[int(i) + 1 for i in range(f.n) if (m >> i) & 1]
                 for m in p["minterm_masks"]]
        return {"n": f.n, "repr": "dnf", "minterms": terms}
    if f.tag == "truth_table":
        return {"n": f.n, "repr": "truth_table",
                "table": "".join(str(int(v)) for v in p["table"])}
    if f.tag == "threshold":
        return {"n": f.n, "repr": "threshold", "k": p["k"]}
    if f.tag == "indicator":
        members = [i + 1 for i in range(f.n) if (p["planted_mask"] >> i) & 1]
        return {"n": f.n, "repr": "indicator", "k": p["k"], "P": members}
    if f.tag == "weighted_real":
        return {"n": f.n, "repr": "weighted_real", "weights": list(p["weights"])}
    raise FormatError(f"functions with representation {f.tag!r} have no file form")


def load_function(path) -> MonotoneFunction:
    """Read a function file; JSON syntax errors surface as FormatError."""
    text = Path(path).read_text()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON in {path}: {exc}") from exc
    return function_from_dict(obj)


def save_function(f: MonotoneFunction, path) -> None:
    Path(path).write_text(json.dumps(function_to_dict(f)) + "\n")
