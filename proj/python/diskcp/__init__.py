"""Python interface to the diskcp library.

Crossed-product elements and spectrum sets travel as the same JSON documents
the command-line tool reads; plain dicts are accepted and returned.
"""

import json

from . import _diskcp
from ._diskcp import (
    ClassError,
    DiskAutomorphism,
    DomainError,
    Error,
    KindMismatch,
    ParseError,
    RationalityRequired,
    canonical_point,
    classify,
    closure_axioms_check,
    covariance_residual,
    fixed_points,
    normal_form,
    operator_norm,
    orbit,
)

__all__ = [
    "ClassError", "DiskAutomorphism", "DomainError", "Error", "KindMismatch", "ParseError",
    "RationalityRequired", "canonical_point", "classify", "closure_axioms_check", "covariance_residual",
    "fixed_points", "normal_form", "operator_norm", "orbit", "represent", "spectrum_closure", "symbol",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def represent(element, phi, kind, x=0j, N=10, **options):
    """Matrix of the truncated representation as a complex numpy array."""
    return _diskcp.represent(_text(element), phi, kind, complex(x), N, options)


def symbol(element, phi):
    """(minus, plus) Laurent coefficients as {power: coefficient} dicts."""
    return _diskcp.symbol(_text(element), phi)


def spectrum_closure(spectrum_set):
    return json.loads(_diskcp.spectrum_closure(_text(spectrum_set)))
