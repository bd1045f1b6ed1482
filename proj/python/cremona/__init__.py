"""Cremona constructions on combinatorial plane-curve data."""

import json as _json

from ._cremona import (
    CremonaError,
    HypothesisError,
    abelianization,
    added_singularities,
    canonical_group,
    central_extend,
    cyclic_quotient_order,
    degree_after,
    free_reduce,
    meridian_trace,
    meridians,
    run_cli,
    singularity_drop,
    smith_normal_form,
    split_test,
)
from . import _cremona


def seed(kind, n):
    """Seed document as a dict: kind is "smooth", "pencil" or "generic-lines"."""
    make = {
        "smooth": _cremona.seed_smooth,
        "pencil": _cremona.seed_pencil,
        "generic-lines": _cremona.seed_generic_lines,
    }
    if kind not in make:
        raise CremonaError(f"unknown seed kind {kind!r}")
    return _json.loads(make[kind](n))


def apply(document, spec):
    """Applies a construction to a document dict and returns the new document."""
    return _json.loads(_cremona.apply(_json.dumps(document), spec))


def audit(degree, spec):
    return _json.loads(_cremona.audit(degree, spec))


def zariski_enumerate(left, right, bound):
    return _json.loads(_cremona.zariski_enumerate(_json.dumps(left), _json.dumps(right), bound))
