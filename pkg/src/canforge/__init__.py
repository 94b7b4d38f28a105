"""Minimal generators for toric surface ideals and canonical ideals of
non-degenerate curves, computed exactly from lattice polygons and Laurent
polynomials."""

from .algebra import GF, QQ
from .canonical import CanonicalGenerators, CaseTag, canonical_ideal, curve_context, genus
from .lattice import LatticePoint, LatticePolygon, convex_hull, interior_hull
from .laurent import LaurentPoly, check_nondegenerate, newton_polygon, parse_laurent
from .toric import ToricGenerators, toric_ideal

__version__ = "0.1.0"

__all__ = [
    "QQ", "GF", "LatticePoint", "LatticePolygon", "convex_hull", "interior_hull",
    "LaurentPoly", "parse_laurent", "newton_polygon", "check_nondegenerate",
    "ToricGenerators", "toric_ideal", "CanonicalGenerators", "CaseTag",
    "canonical_ideal", "curve_context", "genus",
]
