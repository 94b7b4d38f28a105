from .fields import QQ, GF, FpElement, PrimeField, RationalField, field_of, parse_field, is_probable_prime
from .unipoly import UniPoly, gcd_uni, resultant_y, bareiss_det, sylvester_matrix
from .linalg import (
    ExactMatrix,
    Echelon,
    RankInfo,
    rank_and_pivots,
    rank_of,
    greedy_independent,
    kernel_basis,
    rref,
)

__all__ = [
    "QQ", "GF", "FpElement", "PrimeField", "RationalField", "field_of", "parse_field",
    "is_probable_prime", "UniPoly", "gcd_uni", "resultant_y", "bareiss_det", "sylvester_matrix",
    "ExactMatrix", "Echelon", "RankInfo", "rank_and_pivots", "rank_of", "greedy_independent",
    "kernel_basis", "rref",
]
