"""2x2 quaternionic matrices and their complex 4x4 embedding.

Writing every entry as ``c0 + j c1`` gives ``A = A0 + j A1`` with complex
2x2 blocks, and ``A -> [[A0, -conj(A1)], [A1, conj(A0)]]`` is an injective
ring homomorphism into 4x4 complex matrices.  It is the linear map induced on
coordinates ``(z0, w0, z1, w1)`` of the quaternionic column vector
``(z0 + j z1, w0 + j w1)``.  The characteristic polynomial of the image is
real, and is parametrised here as ``x^4 - 2 a3 x^3 + a2 x^2 - 2 a1 x + a0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Real
from typing import Sequence

import numpy as np

from . import quat
from .errors import NonPositiveDeterminant, NonRealCoefficients, SingularMatrix
from .quat import DEFAULT_TOL, ONE, ZERO, Quaternion


@dataclass(frozen=True, slots=True)
class QMat2:
    """Row-major ``[[a, b], [c, d]]`` with quaternion entries."""

    a: Quaternion
    b: Quaternion
    c: Quaternion
    d: Quaternion

    @classmethod
    def of(cls, a, b, c, d) -> QMat2:
        """Build from anything :meth:`Quaternion.coerce` understands."""
        co = Quaternion.coerce
        return cls(co(a), co(b), co(c), co(d))

    @classmethod
    def diag(cls, p, q) -> QMat2:
        return cls.of(p, 0.0, 0.0, q)

    @classmethod
    def identity(cls) -> QMat2:
        return cls(ONE, ZERO, ZERO, ONE)

    def __matmul__(self, other: QMat2) -> QMat2:
        return mat_mul(self, other)

    def __mul__(self, r):
        if not isinstance(r, Real):
            return NotImplemented
        return scalar_mul(r, self)

    __rmul__ = __mul__

    def __add__(self, other: QMat2) -> QMat2:
        return QMat2(self.a + other.a, self.b + other.b,
                     self.c + other.c, self.d + other.d)

    def __sub__(self, other: QMat2) -> QMat2:
        return QMat2(self.a - other.a, self.b - other.b,
                     self.c - other.c, self.d - other.d)

    def entries(self) -> tuple[Quaternion, Quaternion, Quaternion, Quaternion]:
        return self.a, self.b, self.c, self.d

    def norm(self) -> float:
        """Frobenius norm over the 16 real components."""
        return math.sqrt(sum(q.norm2() for q in self.entries()))

    def inverse(self, tol: float = DEFAULT_TOL) -> QMat2:
        return mat_inverse(self, tol)

    def act(self, v: tuple[Quaternion, Quaternion]) -> tuple[Quaternion, Quaternion]:
        """Left action on a column vector of quaternions."""
        u, w = v
        return self.a * u + self.b * w, self.c * u + self.d * w

    def __repr__(self) -> str:
        return f"QMat2(a={self.a!r}, b={self.b!r}, c={self.c!r}, d={self.d!r})"


@dataclass(frozen=True, slots=True)
class CharPolyCoeffs:
    a0: float
    a1: float
    a2: float
    a3: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return self.a0, self.a1, self.a2, self.a3

    def monic(self) -> list[float]:
        """Coefficients of the polynomial, highest degree first."""
        return [1.0, -2.0 * self.a3, self.a2, -2.0 * self.a1, self.a0]


def _dot(p: Quaternion, q: Quaternion, r: Quaternion, s: Quaternion) -> Quaternion:
    """``p q + r s`` without building the intermediate products."""
    a1, b1, c1, d1 = p.w, p.x, p.y, p.z
    a2, b2, c2, d2 = q.w, q.x, q.y, q.z
    a3, b3, c3, d3 = r.w, r.x, r.y, r.z
    a4, b4, c4, d4 = s.w, s.x, s.y, s.z
    return Quaternion(
        (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2) + (a3 * a4 - b3 * b4 - c3 * c4 - d3 * d4),
        (a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2) + (a3 * b4 + b3 * a4 + c3 * d4 - d3 * c4),
        (a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2) + (a3 * c4 - b3 * d4 + c3 * a4 + d3 * b4),
        (a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2) + (a3 * d4 + b3 * c4 - c3 * b4 + d3 * a4),
    )


def mat_mul(A: QMat2, B: QMat2) -> QMat2:
    return QMat2(
        _dot(A.a, B.a, A.b, B.c),
        _dot(A.a, B.b, A.b, B.d),
        _dot(A.c, B.a, A.d, B.c),
        _dot(A.c, B.b, A.d, B.d),
    )


def scalar_mul(r: float, A: QMat2) -> QMat2:
    r = float(r)
    return QMat2(A.a * r, A.b * r, A.c * r, A.d * r)


def embed(A: QMat2) -> np.ndarray:
    # left-j split q = c0 + j c1 with c0 = w + x i, c1 = y - z i
    q = np.array([[e.w, e.x, e.y, e.z] for e in A.entries()])
    c0 = (q[:, 0] + 1j * q[:, 1]).reshape(2, 2)
    c1 = (q[:, 2] - 1j * q[:, 3]).reshape(2, 2)
    M = np.empty((4, 4), dtype=complex)
    M[:2, :2] = c0
    M[2:, :2] = c1
    M[:2, 2:] = -c1.conj()
    M[2:, 2:] = c0.conj()
    return M


def unembed(M: np.ndarray) -> QMat2:
    """Read a quaternionic matrix back from the left half of its embedding."""
    M = np.asarray(M)
    q = [quat.reassemble(complex(M[r, c]), complex(M[r + 2, c]))
         for r, c in ((0, 0), (0, 1), (1, 0), (1, 1))]
    return QMat2(*q)


def det_embedded(A: QMat2) -> float:
    """``det(A_C)``, a nonnegative real number."""
    return float(np.linalg.det(embed(A)).real)


def embedding_is_singular(M: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    """``|det M| <= tol |M|_F^4`` for an embedded matrix ``M``."""
    scale = np.linalg.norm(M) ** 4
    return scale == 0.0 or abs(np.linalg.det(M)) <= tol * scale


def is_singular(A: QMat2, tol: float = DEFAULT_TOL) -> bool:
    return embedding_is_singular(embed(A), tol)


def check_invertible(A: QMat2, tol: float = DEFAULT_TOL, M: np.ndarray | None = None) -> None:
    """Raise :class:`SingularMatrix` unless ``A`` is invertible; ``M`` may pass ``embed(A)``."""
    if embedding_is_singular(embed(A) if M is None else M, tol):
        raise SingularMatrix(f"matrix is singular within tol={tol:g}: {A!r}")


def mat_inverse(A: QMat2, tol: float = DEFAULT_TOL) -> QMat2:
    M = embed(A)
    if embedding_is_singular(M, tol):
        raise SingularMatrix(f"matrix is singular within tol={tol:g}")
    return unembed(np.linalg.inv(M))


def raw_char_poly(M: np.ndarray) -> np.ndarray:
    """Coefficients ``[1, c3, c2, c1, c0]`` of ``det(x I - M)`` by Faddeev-LeVerrier."""
    M = np.asarray(M, dtype=complex)
    n = M.shape[0]
    eye = np.eye(n, dtype=complex)
    coeffs = [1.0 + 0.0j]
    Mk = np.zeros_like(M)
    for k in range(1, n + 1):
        Mk = M @ Mk + coeffs[-1] * eye
        coeffs.append(-np.trace(M @ Mk) / k)
    return np.array(coeffs)


def char_poly(M: np.ndarray, tol: float = DEFAULT_TOL) -> CharPolyCoeffs:
    """Real coefficients ``(a0, a1, a2, a3)`` of the characteristic polynomial.

    ``M`` must be an embedded quaternionic matrix.  The imaginary part of the
    degree-k coefficient is compared against ``tol * max(1, |M|_F)**k``.
    """
    raw = raw_char_poly(M)
    fro = max(1.0, float(np.linalg.norm(M)))
    for k in range(1, 5):
        if abs(raw[k].imag) > tol * fro ** k:
            raise NonRealCoefficients(
                f"coefficient of x^{4 - k} has imaginary part {raw[k].imag:.3e}"
            )
    c3, c2, c1, c0 = (float(v.real) for v in raw[1:])
    a0 = c0
    if a0 <= tol * float(np.linalg.norm(M)) ** 4:
        raise NonPositiveDeterminant(f"a0 = {a0!r} is not positive")
    return CharPolyCoeffs(a0=a0, a1=-c1 / 2.0, a2=c2, a3=-c3 / 2.0)


def poly_eval(M: np.ndarray, poly: Sequence[float]) -> np.ndarray:
    """Evaluate a polynomial (highest degree first) at a square matrix."""
    M = np.asarray(M, dtype=complex)
    eye = np.eye(M.shape[0], dtype=complex)
    out = np.zeros_like(M)
    for coef in poly:
        out = out @ M + coef * eye
    return out


def poly_residual(M: np.ndarray, poly: Sequence[float]) -> float:
    """``|p(M)|_F / |M|_F**deg``, the scale-free size of ``p(M)``."""
    deg = len(poly) - 1
    fro = float(np.linalg.norm(M))
    val = float(np.linalg.norm(poly_eval(M, poly)))
    if fro == 0.0:
        return val
    return val / fro ** deg


def annihilates(M: np.ndarray, poly: Sequence[float], tol: float = DEFAULT_TOL) -> bool:
    deg = len(poly) - 1
    return poly_residual(M, poly) <= tol * (deg + 1)


def to_json(A: QMat2) -> list:
    return [[A.a.to_list(), A.b.to_list()], [A.c.to_list(), A.d.to_list()]]


def from_json(data) -> QMat2:
    if (not isinstance(data, (list, tuple)) or len(data) != 2
            or any(not isinstance(row, (list, tuple)) or len(row) != 2 for row in data)):
        raise ValueError("matrix must be a 2x2 array of quaternions")
    (a, b), (c, d) = data
    return QMat2(quat.from_json(a), quat.from_json(b), quat.from_json(c), quat.from_json(d))
