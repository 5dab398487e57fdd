"""matsim: exact matrix-similarity classification over discrete valuation
rings, the matrix/ideal correspondence, and freeness of ideal lattices over
imaginary quadratic orders."""

from .classify import (
    Case1,
    Case21,
    Case22Extra,
    Case22Main,
    Char2Sep,
    GL2Witness,
    Insep,
    LowerBound,
    Mat2,
    Reducible,
    Unit2,
    canonical_matrix,
    class_list,
    class_number,
    classify,
    compute_m,
    ideal_reps,
    reducible_normalize,
    similar,
    to_canonical,
    triangularize,
    witness,
)
from .polys import MonicPoly, QuadFactorization, disc_quad, is_separable, parse_monic, quad_factor
from .rings import INF, ExtElem, FpTLoc, QuadExt, ZLoc, arith, ring_from_json

__all__ = [
    "Case1",
    "Case21",
    "Case22Extra",
    "Case22Main",
    "Char2Sep",
    "ExtElem",
    "FpTLoc",
    "GL2Witness",
    "INF",
    "Insep",
    "LowerBound",
    "Mat2",
    "MonicPoly",
    "QuadExt",
    "QuadFactorization",
    "Reducible",
    "Unit2",
    "ZLoc",
    "arith",
    "canonical_matrix",
    "class_list",
    "class_number",
    "classify",
    "compute_m",
    "disc_quad",
    "ideal_reps",
    "is_separable",
    "parse_monic",
    "quad_factor",
    "reducible_normalize",
    "ring_from_json",
    "similar",
    "to_canonical",
    "triangularize",
    "witness",
]
