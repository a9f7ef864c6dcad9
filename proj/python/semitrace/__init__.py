"""Semi-invariants, trace ideals and Gorenstein criteria for diagonal abelian groups."""

import json

from . import _semitrace
from ._semitrace import (
    Group,
    SemitraceError,
    all_weights,
    colon_generators,
    crt,
    det_weight,
    group_order,
    group_to_json,
    has_pseudo_reflection,
    hilbert_basis,
    hypotheses,
    inverse_weight,
    is_nonzero,
    mod_inverse,
    pure_power_exponents,
    semi_invariant_generators,
    solve_positive_system,
    weight_of,
)

__all__ = [
    "Group",
    "SemitraceError",
    "all_weights",
    "all_weights_locally_free",
    "analyze",
    "colon_generators",
    "crt",
    "det_weight",
    "gorenstein_on_punctured",
    "group_from_json",
    "group_order",
    "group_to_json",
    "has_pseudo_reflection",
    "hilbert_basis",
    "hypotheses",
    "inverse_weight",
    "is_gorenstein",
    "is_nonzero",
    "load_group",
    "locally_free_on_punctured",
    "mod_inverse",
    "nearly_gorenstein",
    "pure_power_exponents",
    "semi_invariant_generators",
    "solve_positive_system",
    "trace_ideal",
    "weight_of",
]


def group_from_json(data):
    """Group from a JSON string or an already parsed dict."""
    if not isinstance(data, str):
        data = json.dumps(data)
    return _semitrace.group_from_json(data)


def load_group(path):
    with open(path, encoding="utf-8") as fh:
        return _semitrace.group_from_json(fh.read())


def trace_ideal(group, weight, path="auto"):
    return json.loads(_semitrace.trace_ideal(group, list(weight), path))


def locally_free_on_punctured(group, weight):
    return json.loads(_semitrace.locally_free_on_punctured(group, list(weight)))


def all_weights_locally_free(group):
    return json.loads(_semitrace.all_weights_locally_free(group))


def is_gorenstein(group):
    return json.loads(_semitrace.is_gorenstein(group))


def gorenstein_on_punctured(group):
    return json.loads(_semitrace.gorenstein_on_punctured(group))


def nearly_gorenstein(group):
    return json.loads(_semitrace.nearly_gorenstein(group))


def analyze(group):
    """Full report as a dict (same schema as `semitrace analyze --json`)."""
    return json.loads(_semitrace.analyze(group))
