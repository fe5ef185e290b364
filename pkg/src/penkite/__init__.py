"""Penrose kites: exact golden-field arithmetic, kite-and-dart patches and the
quasifold reduction of the kite polytope."""

from .exactnum import INV_PHI, PHI, S, SIGMA, GoldenNum, QuadExt, golden_sign, quad_sign, to_float
from .quasilattice import QVector, RVector, classify_edge, embed, phi_scale
from .tiling import HalfTile, Patch, inflate, seed_patch, verify_patch

__version__ = "0.1.0"

__all__ = [
    "INV_PHI",
    "PHI",
    "S",
    "SIGMA",
    "GoldenNum",
    "QuadExt",
    "golden_sign",
    "quad_sign",
    "to_float",
    "QVector",
    "RVector",
    "classify_edge",
    "embed",
    "phi_scale",
    "HalfTile",
    "Patch",
    "inflate",
    "seed_patch",
    "verify_patch",
]
