"""Transversality geometry of graph surfaces in the Heisenberg group."""

import json as _json
from fractions import Fraction as _Fraction

from ._cotlab import (  # noqa: F401
    CotlabError,
    DomainError,
    Jet2,
    Surface,
    TraceSample,
    __version__,
    bernstein,
    classify_point,
    cot,
    cot_printed,
    cot_from_constants,
    dot,
    family_names,
    make_family,
    pminimal_local,
    pminimal_residual,
    riccati_closed_form,
    singular_verdict,
    surfaces,
    trace,
    zcot_residual,
    zero_cot_solution,
)
from ._cotlab import _run_suite_json, _structure_constants


def run_suite(name):
    """Run a verification suite and return the report as a dict."""
    return _json.loads(_run_suite_json(name))


def structure_constants(model):
    """a[i][j][k] as Fractions, with [v_i, v_j] = sum_k a[i][j][k] v_k."""
    return [[[_Fraction(n, d) for n, d in row] for row in plane] for plane in _structure_constants(model)]
