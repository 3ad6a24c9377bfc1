"""Poisson brackets on Q(i)[x,y,z] and Ore extensions of Q(i)[x,y].

Polynomials go in and come out as strings in canonical form. Derivations
are written ``"x=EXPR,y=EXPR"``.
"""

import json
import os
from pathlib import Path

from ._poisson_ore import (
    ParseError,
    PreconditionError,
    UnknownVariable,
    bracket,
    canonical,
    jacobi,
    ore_mul,
    shamsuddin,
)
from . import _poisson_ore as _core

_registry = Path(__file__).with_name("registry.ini")
if "POISSON_ORE_REGISTRY" not in os.environ and _registry.exists():
    os.environ["POISSON_ORE_REGISTRY"] = str(_registry)


def darboux(delta, dmax=2, threads=1):
    return json.loads(_core.darboux_json(delta, dmax, threads))


def classify(delta, dmax=2, side="poisson", threads=1):
    return json.loads(_core.classify_json(delta, dmax, side, threads))


def run(*args):
    """Runs the command line tool; returns (exit code, stdout, stderr)."""
    return _core.run([str(a) for a in args])


__all__ = [
    "ParseError",
    "PreconditionError",
    "UnknownVariable",
    "bracket",
    "canonical",
    "classify",
    "darboux",
    "jacobi",
    "ore_mul",
    "run",
    "shamsuddin",
]
