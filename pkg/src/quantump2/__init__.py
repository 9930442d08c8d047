"""Exact computations with quadratic algebras on three generators.

Noncommutative Groebner bases and Hilbert functions, Koszul duals, twists and
Ore extensions, point-scheme cubics with their classification, and the
regularity test for graded skew Clifford algebras.
"""
from .exactfield import Field, Scalar
from .ncpoly import FreeAlgebra, NcPoly
from .quadalg import (GradedLinearMap, OreData, QuadraticAlgebra, koszul_dual,
                      ore_extension, polynomial_ring, substitute_generators, twist,
                      validate_ore)
from .ncgroebner import buchberger_truncated, hilbert_function, is_normalizing_sequence
from .pointscheme import (classify_cubic, fit_projective_extension, multilinearize,
                          pointscheme_cubic, sample_points, sigma_eval)
from .gsca import cv_regularity_check, gsca_from_definition, skew_poly_ring
from .catalog import build

__all__ = [
    "Field", "Scalar", "FreeAlgebra", "NcPoly", "GradedLinearMap", "OreData",
    "QuadraticAlgebra", "koszul_dual", "ore_extension", "polynomial_ring",
    "substitute_generators", "twist", "validate_ore", "buchberger_truncated",
    "hilbert_function", "is_normalizing_sequence", "classify_cubic",
    "fit_projective_extension", "multilinearize", "pointscheme_cubic", "sample_points",
    "sigma_eval", "cv_regularity_check", "gsca_from_definition", "skew_poly_ring", "build",
]
