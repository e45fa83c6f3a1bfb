"""One-point algebraic-geometric codes and the secant-height geometry of their syndromes."""

from .agcode import CodeConfig, GoppaCode, build_code, dual_multipliers, encode, true_min_distance
from .curves import Curve, Divisor, Point, RRFunction, evaluate, genus, rational_points, rr_basis
from .decoder import DecodeResult, Status, cross_validate, decode_geometric, decode_toeplitz_g0
from .galois import FieldElement, FieldSpec, field_build
from .linalg import Matrix, column_submatrix, kernel, rank, rref, solve
from .secantgeom import (
    Stability,
    StratumLabel,
    SyndromePoint,
    classify_stability,
    s_invariant,
    secant_height,
    span_contains,
    spannedness_check,
    stratify_all,
    syndrome,
    uniqueness_check,
)

__version__ = "0.1.0"
