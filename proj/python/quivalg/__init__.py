"""Exact computations on path algebras of acyclic quivers."""

import json

from ._quivalg import (  # noqa: F401
    InputError,
    PathAlgebra,
    PreconditionError,
    QuivalgError,
    TheoremViolation,
    axioms_hold,
    center_dim,
    central_derivations_vanish,
    check,
    commutator_dim,
    derivation_dim,
    jordan_dim,
    jordan_equals_der,
    lie_dim,
    lie_equals_der_plus_phi,
    load,
    phi_dim,
    w_full,
)
from . import _quivalg


def load_file(path, field="rat"):
    with open(path, encoding="utf-8") as fh:
        return load(fh.read(), field)


def _as_text(map_data):
    return map_data if isinstance(map_data, str) else json.dumps(map_data)


def report(algebra):
    return json.loads(algebra.report())


def decompose(algebra, map_data):
    return json.loads(_quivalg.decompose(algebra, _as_text(map_data)))


def is_map_of_kind(algebra, map_data, kind):
    return _quivalg.check(algebra, _as_text(map_data), kind)


def faithful(algebra, idempotent):
    return json.loads(_quivalg.faithful(algebra, idempotent))


def strip_report(algebra):
    return json.loads(_quivalg.strip_report(algebra))


def verify(theorems="3.4,4.4,3.5,4.3,4.7", count=20, seed=1, fields=("rat", "fp:5")):
    return json.loads(_quivalg.verify(theorems, count, seed, list(fields)))
