"""Exact semi-total domination solvers and Cartesian product bound checks."""

import json

from ._core import (
    Graph,
    InputError,
    OracleGuardError,
    PreconditionError,
    __version__,
    cartesian_product,
    enumerate_min_semitotal_sets,
    generate,
    is_semitotal_dominating,
    is_two_packing,
    max_allied_set,
    parse_graph6,
    satisfies,
    solve,
)
from . import _core


def verify_pair(left, right, replay=True, max_product=49):
    """Check one factor pair, e.g. verify_pair("path:2", "cycle:4"). Returns the record as a dict."""
    return json.loads(_core._verify_pair_json(left, right, replay, max_product))


def scan(spec, replay=True, workers=0):
    """Run verify_pair over a family spec such as "paths:2-4 x cycles:3-5"."""
    return json.loads(_core._scan_json(spec, replay, workers))


__all__ = [
    "Graph",
    "InputError",
    "OracleGuardError",
    "PreconditionError",
    "__version__",
    "cartesian_product",
    "enumerate_min_semitotal_sets",
    "generate",
    "is_semitotal_dominating",
    "is_two_packing",
    "max_allied_set",
    "parse_graph6",
    "satisfies",
    "scan",
    "solve",
    "verify_pair",
]
