"""Exact diagonal reduction, row completion and stability checks over effective rings.

Elements are passed as JSON-compatible values: integers for Z and Z/n,
coefficient lists for F_p[x], lists for products and trivial extensions,
and strings such as "3/4" for rational parts.
"""

import json

from . import _core
from ._core import EdrError, InternalError, ParseError, PreconditionError, UnsupportedError

__all__ = [
    "EdrError",
    "InternalError",
    "ParseError",
    "PreconditionError",
    "UnsupportedError",
    "bezout",
    "check",
    "complete",
    "reduce2x2",
    "ring_expression",
    "rings",
    "run_cli",
    "snf",
]


def ring_expression(spec):
    return _core.ring_expression(spec)


def rings():
    return list(_core.shipped_rings())


def snf(ring, rows, verify=True):
    return json.loads(_core.snf(ring, json.dumps(rows), verify))


def reduce2x2(ring, rows, verify=True):
    return json.loads(_core.reduce2x2(ring, json.dumps(rows), verify))


def complete(ring, row, d=None):
    return json.loads(_core.complete(ring, json.dumps(row), None if d is None else json.dumps(d)))


def check(ring, prop, bound=None):
    return json.loads(_core.check(ring, prop, bound))


def bezout(ring, a, b):
    return json.loads(_core.bezout(ring, json.dumps(a), json.dumps(b)))


def run_cli(args):
    """Returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
