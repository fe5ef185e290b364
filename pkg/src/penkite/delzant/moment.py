"""Ambient and reduced moment maps, vectorized over leading axes."""

from __future__ import annotations

import numpy as np

from .polytope import DelzantData, kernel_basis

__all__ = ["ambient_moment_map", "reduced_moment_map", "moment_image", "basis_rows"]


def ambient_moment_map(z, data: DelzantData) -> np.ndarray:
    """``J(z) = |z_j|^2 + lambda_j`` for ``z`` of shape ``(..., d)``."""
    z = np.asarray(z, dtype=complex)
    return np.abs(z) ** 2 + np.asarray(data.lam_float())


def basis_rows(data: DelzantData, basis="B12"):
    """Exact rows of a named kernel basis (``"B12"`` or ``"B34"``) or the rows passed in."""
    if isinstance(basis, str):
        return kernel_basis(data)[basis]
    return basis


def reduced_moment_map(z, data: DelzantData, basis="B12") -> np.ndarray:
    """``psi(z) = B (|z|^2 + lambda)``; vanishes exactly on the reduction level set."""
    rows = basis_rows(data, basis)
    b = np.array([[float(g) for g in row] for row in rows])
    return ambient_moment_map(z, data) @ b.T


def moment_image(z, data: DelzantData) -> np.ndarray:
    """Point ``mu`` of the polytope with ``<mu, X_j> = J_j(z)``, least squares over all facets.

    On the level set the four conditions are consistent, so the residual of the fit
    measures how far ``z`` is from it.
    """
    nx = np.array([p.to_float() for p in data.normals()])
    J = ambient_moment_map(z, data)
    sol, *_ = np.linalg.lstsq(nx, J.reshape(-1, data.d).T, rcond=None)
    return sol.T.reshape(J.shape[:-1] + (2,))

