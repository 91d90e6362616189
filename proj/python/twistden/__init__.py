"""Exact checks of twisted denominator identities for the fake monster superalgebra."""

import json
from fractions import Fraction

from . import _core
from ._core import TwistdenError, UsageError

__all__ = [
    "TwistdenError",
    "UsageError",
    "series",
    "theta_coset_formula",
    "twist_matrices",
    "fixed_lattice",
    "simple_root_mult",
    "mult_table_csv",
    "verify",
]


def series(name, prec=50):
    """Integer coefficients of a named q-series, q^0 .. q^(prec-1)."""
    return [int(c) for c in _core.series(name, prec)]


def theta_coset_formula(order, norm_class, prec=10):
    """{exponent: coefficient} of the closed theta formula for a coset class."""
    return {Fraction(e): Fraction(c) for e, c in _core.theta_coset_formula(order, str(Fraction(norm_class)), str(prec))}


def twist_matrices(order):
    d = _core.twist_matrices(order)
    for key in ("V", "L", "R", "tabulated"):
        d[key] = [[Fraction(x) for x in row] for row in d[key]]
    d["normalizer"] = Fraction(d["normalizer"])
    return d


def fixed_lattice(order):
    d = _core.fixed_lattice(order)
    d["determinant"] = int(d["determinant"])
    d["level"] = int(d["level"])
    d["invariants"] = [int(x) for x in d["invariants"]]
    d["gram"] = [[Fraction(x) for x in row] for row in d["gram"]]
    return d


def simple_root_mult(order, k):
    even, odd = _core.simple_root_mult(order, k)
    return int(even), int(odd)


def mult_table_csv(order, height, max_norm=None):
    return _core.mult_table_csv(order, height, None if max_norm is None else str(max_norm))


def verify(target, order=None, height=0, prec=50, jobs=1):
    """Runs a verification target and returns the parsed report."""
    return json.loads(_core.verify(target, order, height, str(prec), jobs))
