"""Exact and numeric toolkit for torsion-free affine connections on the plane."""

from .algebra import (
    MonoTriMap,
    PuiseuxPoly,
    VectorField2,
    map_compose,
    map_invert,
    rational_power,
    vf_bracket,
)

__version__ = "0.1.0"

__all__ = [
    "MonoTriMap",
    "PuiseuxPoly",
    "VectorField2",
    "map_compose",
    "map_invert",
    "rational_power",
    "vf_bracket",
    "__version__",
]
