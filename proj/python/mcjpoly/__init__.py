"""Multivariate circular Jacobi polynomials."""

import json

from ._core import (
    ParameterError,
    expected_norm,
    partitions,
    phi,
    render,
    run,
    verify_orthogonality_json,
)


def verify_orthogonality(r, d="2", alpha=2.0, nu=0.0, max_weight=2, points=0, tol=1e-9):
    """Quadrature Gram matrix report as a dict."""
    return json.loads(verify_orthogonality_json(r, d, alpha, nu, max_weight, points, tol))


__all__ = [
    "ParameterError",
    "expected_norm",
    "partitions",
    "phi",
    "render",
    "run",
    "verify_orthogonality",
]
