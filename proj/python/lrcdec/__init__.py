"""List and burst decoding of locally repairable and partial-MDS codes."""

import json
from fractions import Fraction

from . import _lrcdec
from ._lrcdec import (
    BudgetError,
    ConfigError,
    DomainError,
    bar_t_g,
    irs_radius,
    johnson_radius,
    johnson_t,
    normalized_radius,
    table,
)

__all__ = [
    "BudgetError",
    "ConfigError",
    "DomainError",
    "bar_t_g",
    "encode_lrc",
    "failure_prob_exact",
    "irs_radius",
    "johnson_radius",
    "johnson_t",
    "list_decode",
    "mk_decode",
    "mk_success_prob",
    "normalized_radius",
    "radius_report",
    "random_pmds",
    "success_prob_grs",
    "table",
    "tamo_barg",
    "union_bound_failure",
    "unique_decode",
]


def _code_text(code):
    return code if isinstance(code, str) else json.dumps(code)


def radius_report(n, k, r, rho, q=0, ell=2):
    """Radii, list bounds and gain predicates of an LRC shape, as a dict."""
    return json.loads(_lrcdec.radius_report(n, k, r, rho, q, ell))


def success_prob_grs(n, k, r, rho, q, t_l=None, t_g=None):
    """Lower bound on the probability of a unique decoding result."""
    return Fraction(_lrcdec.success_prob_grs(n, k, r, rho, q, -1 if t_l is None else t_l, -1 if t_g is None else t_g))


def failure_prob_exact(n, k, r, rho, t):
    """Probability that a random t-subset is not (t+1)-independent on a PMDS code."""
    return Fraction(_lrcdec.failure_prob_exact(n, k, r, rho, t))


def union_bound_failure(n, k, r, rho):
    return Fraction(_lrcdec.union_bound_failure(n, k, r, rho))


def mk_success_prob(n, k, r, rho, t, ell, q):
    return Fraction(_lrcdec.mk_success_prob(n, k, r, rho, t, ell, q))


def tamo_barg(q, n, k, r, rho):
    """Tamo-Barg LRC descriptor (dict)."""
    return json.loads(_lrcdec.tamo_barg(q, n, k, r, rho))


def random_pmds(q, n, k, r, rho, seed=1):
    """Verified random PMDS code descriptor (dict)."""
    return json.loads(_lrcdec.random_pmds(q, n, k, r, rho, seed))


def encode_lrc(code, message):
    return _lrcdec.encode_lrc(_code_text(code), list(message))


def list_decode(code, received, t_l=None, t_g=None):
    """All codewords within t_g of received; returns (codewords, complete)."""
    return _lrcdec.list_decode(_code_text(code), list(received), -1 if t_l is None else t_l, -1 if t_g is None else t_g)


def unique_decode(code, received, t_l=None, t_g=None):
    """Probabilistic unique decoding; None when the result is not unique."""
    return _lrcdec.unique_decode(
        _code_text(code), list(received), -1 if t_l is None else t_l, -1 if t_g is None else t_g
    )


def mk_decode(code, rows):
    """Burst decoding of an interleaved word; returns (rows, support) or None."""
    return _lrcdec.mk_decode(_code_text(code), [list(r) for r in rows])
