"""Yang-Baxter maps from matrix KdV solitons."""

import json as _json

from ._ybmap import (
    Error,
    grassmannian_map,
    iterate,
    kdv_residual,
    lax_matrix,
    projector_map,
    refactorization_residual,
    refactorize_numeric,
    soliton_field,
    transfer_map,
    vector_map,
)
from . import _ybmap


def check_yang_baxter(family, trials=1000, seed=0, tol=1e-9):
    return _json.loads(_ybmap._check_yang_baxter(family, trials, seed, tol))


def check_reversibility(family, trials=1000, seed=0, tol=1e-10):
    return _json.loads(_ybmap._check_reversibility(family, trials, seed, tol))


__all__ = [
    "Error",
    "check_reversibility",
    "check_yang_baxter",
    "grassmannian_map",
    "iterate",
    "kdv_residual",
    "lax_matrix",
    "projector_map",
    "refactorization_residual",
    "refactorize_numeric",
    "soliton_field",
    "transfer_map",
    "vector_map",
]
