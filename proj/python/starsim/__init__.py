"""Star-decomposition simulator for sparse Hermitian matrices.

Thin convenience layer over the compiled core: reports come back as parsed
dictionaries instead of JSON strings, everything else passes through.
"""

import json as _json

from ._core import (  # noqa: F401
    SparseHermitian,
    compare,
    generate,
    load_matrix,
    log_star,
    matrix_from_json,
    random_state,
    reference_state,
    rounds,
    unit_query_cost,
)
from ._core import decompose_report as _decompose_report
from ._core import simulate as _simulate
from ._core import verify_report as _verify_report

__all__ = [
    "SparseHermitian",
    "compare",
    "decompose",
    "generate",
    "load_matrix",
    "log_star",
    "matrix_from_json",
    "random_state",
    "reference_state",
    "rounds",
    "simulate",
    "unit_query_cost",
    "verify",
]


def decompose(h):
    """Decomposition statistics and structural checks as a dict."""
    return _json.loads(_decompose_report(h))


def verify(h, t=0.5, epsilon=1e-4, k=1):
    """Full invariant battery plus a short accuracy run, as a dict."""
    return _json.loads(_verify_report(h, t, epsilon, k))


def simulate(h, t=1.0, epsilon=1e-3, k=1, norm="spectral", state=None, state_seed=1):
    """Evolve a state; returns (final_state, report_dict)."""
    final_state, report = _simulate(h, t, epsilon, k, norm, state, state_seed)
    return final_state, _json.loads(report)
