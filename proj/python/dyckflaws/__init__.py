"""Dyck paths with flaws: refined counts by peaks, valleys, double ascents and
double descents, with exact closed forms, bijections and series identities."""

import json

from ._core import (
    catalan,
    central_peak,
    cf_decompose,
    cf_step,
    cf_step_inverse,
    complement,
    count_table,
    enumerate_paths,
    height_profile,
    is_catalan,
    narayana_ascent,
    narayana_peak,
    normalize,
    one_flaw_peak,
    peak_pair_sum,
    recurrence_peak_poly,
    reverse_complement,
    series_names,
    stats,
    table_polynomial,
    table_polynomial_str,
)
from . import _core

__version__ = "0.1.0"


def series(name, order):
    """Nonzero coefficients of a generating function as (n, xexp, yexp, coeff)."""
    return [
        (e["n"], e["xexp"], e["yexp"], int(e["coeff"]))
        for e in json.loads(_core.series_json(name, order))
    ]


def identity_report(order):
    return json.loads(_core.identity_report_json(order))


def verify(suite="all", n_max=6, order=6):
    return json.loads(_core.verify_json(suite, n_max, order))
