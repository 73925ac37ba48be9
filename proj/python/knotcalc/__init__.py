"""Exact surgery-slope and Alexander-polynomial calculator.

Thin wrapper over the C++ core: expressions go in as text, structured
results come back as plain dicts (all numeric values are decimal strings,
so nothing is ever rounded).
"""

import json

from ._core import InvariantError, ParseError, alexander, classify_text, slopes
from ._core import check_pd as _check_pd
from ._core import classify_json as _classify_json

__all__ = [
    "InvariantError",
    "ParseError",
    "alexander",
    "check_pd",
    "classify",
    "classify_text",
    "slopes",
]


def classify(expr, strict=False):
    """Classification record for a knot expression, as a dict."""
    return json.loads(_classify_json(expr, strict))


def check_pd(pd_text):
    """Diagram predicates and canonical form for a PD text, as a dict."""
    return json.loads(_check_pd(pd_text))
