"""Classification of isometries of hyperbolic 5-space via 2x2 quaternionic matrices."""

from .classify import ClassificationReport, Invariants, classify, invariants, minimal_poly_equals_char_poly
from .dynamics import DynamicalType
from .errors import (DegenerateReduction, DivisionByZero, NonPositiveDeterminant, NonRealCoefficients,
                     QuatMoebError, SingularMatrix)
from .moebius import INF, FlaggedMap, Inversion, Reflection, apply, compose_inversions, orbit
from .qmat2 import CharPolyCoeffs, QMat2, char_poly, embed
from .quat import DEFAULT_TOL, Quaternion
from .spectral import (NormalForm, NormalFormKind, eigen_structure_oracle, fixed_points, normal_form,
                       right_eigenpairs)
from .zclass import ZClassType, in_centralizer, representative, sample_centralizer, zclass_of

__all__ = [
    "CharPolyCoeffs", "ClassificationReport", "DEFAULT_TOL", "DegenerateReduction", "DivisionByZero",
    "DynamicalType", "FlaggedMap", "INF", "Invariants", "Inversion", "NonPositiveDeterminant",
    "NonRealCoefficients", "NormalForm", "NormalFormKind", "QMat2", "QuatMoebError", "Quaternion",
    "Reflection", "SingularMatrix", "ZClassType", "apply", "char_poly", "classify", "compose_inversions",
    "eigen_structure_oracle", "embed", "fixed_points", "in_centralizer", "invariants",
    "minimal_poly_equals_char_poly", "normal_form", "orbit", "representative", "right_eigenpairs",
    "sample_centralizer", "zclass_of",
]
