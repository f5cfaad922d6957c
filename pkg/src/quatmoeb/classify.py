"""Dynamical type from the conjugacy invariants c1, c2, c3.

With ``chi(A_C) = x^4 - 2 a3 x^3 + a2 x^2 - 2 a1 x + a0`` the invariants are

    c1 = a1^2 / a0^(3/2),   c2 = a2 / a0^(1/2),   c3 = a3^2 / a0^(1/2).

They are unchanged by conjugation and by real rescaling of ``A``.  The
decision tree compares ``c1`` with ``c3``, ``c2`` with ``c1 + 2`` and ``c1``
with 4, and separates 1-rotatory elliptic from 1-rotatory parabolic elements
by testing whether the quadratic ``x^2 - 2 r cos(t) x + r^2`` already
annihilates ``A_C``.

``c1 == c3`` alone does not pin down the branch: the hyperbolic elements
``diag(r e^{it}, s e^{i(pi - t)})``, e.g. ``diag(2, -1)``, also satisfy it,
with ``a1`` and ``a3`` of opposite sign.  The first test therefore compares
the signed roots ``a1 / a0^(3/4)`` and ``a3 / a0^(1/4)`` whose squares are
``c1`` and ``c3``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import spectral
from .dynamics import DynamicalType
from .errors import NonPositiveDeterminant
from .qmat2 import CharPolyCoeffs, QMat2, char_poly, check_invertible, embed, poly_residual
from .quat import DEFAULT_TOL


@dataclass(frozen=True)
class Invariants:
    c1: float
    c2: float
    c3: float

    def as_tuple(self) -> tuple[float, float, float]:
        return self.c1, self.c2, self.c3


@dataclass(frozen=True)
class ClassificationReport:
    invariants: Invariants
    dtype: DynamicalType
    params: dict
    margins: dict
    borderline: bool
    coeffs: CharPolyCoeffs
    minpoly_residual: float | None = None
    path: tuple = field(default=(), compare=False)

    def to_json(self) -> dict:
        return {
            "type": self.dtype.value,
            "c1": self.invariants.c1,
            "c2": self.invariants.c2,
            "c3": self.invariants.c3,
            "params": dict(self.params),
            "borderline": self.borderline,
            "margins": dict(self.margins),
        }


def invariants(coeffs: CharPolyCoeffs) -> Invariants:
    a0, a1, a2, a3 = coeffs.as_tuple()
    if not a0 > 0:
        raise NonPositiveDeterminant(f"a0 = {a0!r}")
    root = math.sqrt(a0)
    return Invariants(a1 * a1 / (a0 * root), a2 / root, a3 * a3 / root)


def signed_invariants(coeffs: CharPolyCoeffs) -> tuple[float, float]:
    """``(a1 / a0^(3/4), a3 / a0^(1/4))``; their squares are ``c1`` and ``c3``."""
    q = coeffs.a0 ** 0.25
    return coeffs.a1 / q ** 3, coeffs.a3 / q


def candidate_minimal_poly(coeffs: CharPolyCoeffs, inv: Invariants) -> list[float]:
    """``x^2 - sign(a3) (a0 c1^2)^(1/4) x + sqrt(a0)``, highest degree first.

    ``(a0 c1^2)^(1/4)`` equals ``2 r |cos t|``; the sign of ``cos t`` is that
    of ``a3 = 2 r cos t``.
    """
    sigma = -1.0 if coeffs.a3 < 0 else 1.0
    return [1.0, -sigma * (coeffs.a0 * inv.c1 ** 2) ** 0.25, math.sqrt(coeffs.a0)]


def minpoly_residual(A: QMat2, coeffs: CharPolyCoeffs, inv: Invariants) -> float:
    """``|m1(A_C)|_F / |A_C|_F^2`` for the candidate quadratic ``m1``."""
    return poly_residual(embed(A), candidate_minimal_poly(coeffs, inv))


def minimal_poly_equals_char_poly(A: QMat2, coeffs: CharPolyCoeffs, inv: Invariants,
                                  tol: float = DEFAULT_TOL) -> bool:
    """True when the candidate quadratic fails to annihilate ``A_C``.

    Only meaningful in the branch ``c1 == c3``, ``c2 == c1 + 2``, ``c1 < 4``
    where ``chi(A_C)`` is the square of that quadratic.
    """
    return minpoly_residual(A, coeffs, inv) > 3 * tol


def is_real_scalar(A: QMat2, tol: float = DEFAULT_TOL) -> bool:
    """Whether ``A`` is within ``tol`` of ``r I`` for a real ``r``."""
    eps = tol * A.norm()
    return (A.b.norm() <= eps and A.c.norm() <= eps
            and (A.a - A.d).norm() <= eps
            and A.a.imag.norm() <= eps and A.d.imag.norm() <= eps)


def _params(dtype: DynamicalType, classes: list) -> dict:
    lo, hi = classes[0], classes[-1]
    r, s, theta, phi = lo.modulus, hi.modulus, lo.angle, hi.angle
    if dtype is DynamicalType.TWO_ROTATORY_HYPERBOLIC:
        return {"r": r, "s": s, "theta": theta, "phi": phi, "ratio": s / r}
    if dtype in (DynamicalType.ONE_ROTATORY_HYPERBOLIC, DynamicalType.STRETCH):
        return {"r": r, "s": s, "theta": theta, "ratio": s / r}
    if dtype is DynamicalType.TWO_ROTATORY_ELLIPTIC:
        return {"r": 0.5 * (r + s), "theta": theta, "phi": phi}
    return {"r": r, "theta": theta}


def classify(A: QMat2, tol: float = DEFAULT_TOL, guard: float | None = None) -> ClassificationReport:
    """Dynamical type of the isometry induced by ``A``.

    A margin ``m`` counts as zero when ``|m| <= tol * scale`` with
    ``scale = max(1, |c1|, |c2|, |c3|)``.  The report is flagged borderline
    when a margin consulted on the decision path is not zero but no larger
    than ``guard * scale`` (default ``guard = sqrt(tol)``).
    """
    M = embed(A)
    check_invertible(A, tol, M)
    if guard is None:
        guard = math.sqrt(tol)
    coeffs = char_poly(M, tol)
    inv = invariants(coeffs)
    c1, c2, c3 = inv.as_tuple()
    s1, s3 = signed_invariants(coeffs)
    scale = max(1.0, abs(c1), abs(c2), abs(c3))
    margins = {
        "c1_minus_c3": abs(c1 - c3),
        "signed_gap": s1 - s3,
        "c2_minus_c1_plus_2": c2 - (c1 + 2.0),
        "c1_minus_4": c1 - 4.0,
    }
    zero = tol * scale
    path = ["signed_gap"]
    residual = None

    if abs(margins["signed_gap"]) > zero:
        dtype = DynamicalType.TWO_ROTATORY_HYPERBOLIC
    else:
        path.append("c2_minus_c1_plus_2")
        m = margins["c2_minus_c1_plus_2"]
        if m < -zero:
            dtype = DynamicalType.TWO_ROTATORY_ELLIPTIC
        elif m > zero:
            dtype = DynamicalType.ONE_ROTATORY_HYPERBOLIC
        else:
            path.append("c1_minus_4")
            m = margins["c1_minus_4"]
            if m > zero:
                dtype = DynamicalType.STRETCH
            elif m >= -zero:
                dtype = DynamicalType.IDENTITY if is_real_scalar(A, tol) else DynamicalType.TRANSLATION
            else:
                residual = minpoly_residual(A, coeffs, inv)
                margins["minpoly_residual"] = residual
                dtype = (DynamicalType.ONE_ROTATORY_PARABOLIC if residual > 3 * tol
                         else DynamicalType.ONE_ROTATORY_ELLIPTIC)

    borderline = any(zero < abs(margins[k]) <= guard * scale for k in path)
    if residual is not None and 3 * tol < residual <= 3 * guard:
        borderline = True

    params = _params(dtype, spectral.classes_of_embedding(M, tol))
    return ClassificationReport(inv, dtype, params, margins, borderline, coeffs, residual, tuple(path))
