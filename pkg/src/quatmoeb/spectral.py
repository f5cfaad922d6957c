"""Right eigenvalues, boundary fixed points and the conjugacy normal form.

Right eigenvalues of a quaternionic matrix are only defined up to quaternion
similarity, so each one is reported by its representative ``r e^{i t}`` with
``0 <= t <= pi``.  They are read off the complex embedding, whose spectrum is
``{r e^{+-it}, s e^{+-ip}}``.

Several decisions here separate "equal" from "different" eigenvalue data.  A
non-semisimple eigenvalue moves by ``O(sqrt(eps))`` under rounding, so those
decisions use the structural tolerance ``sqrt(tol)`` rather than ``tol``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
import scipy.linalg

from . import quat
from .dynamics import DynamicalType
from .errors import DegenerateReduction
from .moebius import INF, BoundaryPoint, point_distance
from .qmat2 import QMat2, check_invertible, embed
from .qmat2 import to_json as mat_to_json
from .quat import DEFAULT_TOL, ONE, ZERO, Quaternion

QVec = tuple  # (Quaternion, Quaternion)


def structural_tol(tol: float) -> float:
    return math.sqrt(tol)


@dataclass(frozen=True)
class EigenClass:
    """One similarity class of right eigenvalues.

    ``value`` has nonnegative imaginary part (exactly zero for real classes);
    ``multiplicity`` is 2 when both classes of the matrix coincide.
    """

    value: complex
    multiplicity: int = 1

    @property
    def modulus(self) -> float:
        return abs(self.value)

    @property
    def angle(self) -> float:
        return math.atan2(self.value.imag, self.value.real)

    @property
    def is_real(self) -> bool:
        return self.value.imag == 0.0


@dataclass(frozen=True)
class RightEigenPair:
    value: complex
    vector: QVec

    def residual(self, A: QMat2) -> float:
        """``|A v - v lambda|`` relative to ``|A| |v|``."""
        lam = Quaternion.from_complex(self.value)
        u, w = self.vector
        au, aw = A.act(self.vector)
        num = math.sqrt((au - u * lam).norm2() + (aw - w * lam).norm2())
        den = A.norm() * math.sqrt(u.norm2() + w.norm2())
        return num / den


def _snap(z: complex, stol: float) -> complex:
    """Fold into the closed upper half plane; land exactly on the axis if close."""
    im = abs(z.imag)
    if im <= stol * abs(z):
        return complex(z.real, 0.0)
    return complex(z.real, im)


def similarity_classes(A: QMat2, tol: float = DEFAULT_TOL) -> list[EigenClass]:
    """The one or two eigenvalue classes, sorted by modulus then angle."""
    check_invertible(A, tol)
    return classes_of_embedding(embed(A), tol)


def classes_of_embedding(M: np.ndarray, tol: float = DEFAULT_TOL) -> list[EigenClass]:
    """``similarity_classes`` for an already embedded, invertible matrix."""
    stol = structural_tol(tol)
    w = [complex(v) for v in np.linalg.eigvals(M)]
    folded = [v.conjugate() if v.imag < 0 else v for v in w]

    def mean(vals) -> complex:
        # the divisor is 2 or 4, so this rounds exactly like numpy's mean
        return sum(vals) / len(vals)

    pairings = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))

    def spread(p):
        return max(abs(folded[i] - folded[j]) for i, j in p)

    best = min(pairings, key=spread)

    def class_value(idx) -> complex:
        m = mean([folded[i] for i in idx])
        if abs(m.imag) <= stol * abs(m):
            # real class: the raw eigenvalues straddle the axis, their mean is sharp
            return complex(mean([w[i] for i in idx]).real, 0.0)
        return m

    v1, v2 = (class_value(p) for p in best)
    if abs(v1 - v2) <= stol * max(abs(v1), abs(v2)):
        return [EigenClass(class_value((0, 1, 2, 3)), multiplicity=2)]

    classes = [EigenClass(_snap(v1, stol)), EigenClass(_snap(v2, stol))]
    r1, r2 = classes[0].modulus, classes[1].modulus
    if abs(r1 - r2) <= stol * max(r1, r2):
        classes.sort(key=lambda c: c.angle)
    else:
        classes.sort(key=lambda c: c.modulus)
    return classes


def _qvec_from_complex(u: np.ndarray) -> QVec:
    """``(z0, w0, z1, w1) -> (z0 + j z1, w0 + j w1)``."""
    z0, w0, z1, w1 = (complex(t) for t in u)
    return quat.reassemble(z0, z1), quat.reassemble(w0, w1)


def _qvec_normalize(v: QVec) -> QVec:
    u, w = v
    n = math.sqrt(u.norm2() + w.norm2())
    return u * (1.0 / n), w * (1.0 / n)


def _null_space(M: np.ndarray, lam: complex, tol: float) -> tuple[np.ndarray, int]:
    """Orthonormal null vectors of ``M - lam I`` (columns) and their count.

    At least one vector (the last right singular vector) is always returned.
    """
    _, s, vh = np.linalg.svd(M - lam * np.eye(4))
    count = int(np.sum(s <= tol * np.linalg.norm(M)))
    basis = vh.conj().T
    return basis[:, 4 - max(count, 1):], count


def right_eigenpairs(A: QMat2, tol: float = DEFAULT_TOL) -> list[RightEigenPair]:
    """Right eigenvectors ``A v = v lambda`` for every eigenvalue class.

    One vector is returned per independent quaternionic eigen-direction:
    a class whose eigenvectors span all of ``H^2`` contributes two.
    """
    M = embed(A)
    pairs = []
    for cls in similarity_classes(A, tol):
        lam = cls.value
        basis, count = _null_space(M, lam, tol)
        if cls.is_real:
            # v and v j are both complex null vectors of a real eigenvalue
            dim = min(max(count // 2, 1), cls.multiplicity)
            if dim == 2:
                pairs.append(RightEigenPair(lam, (ONE, ZERO)))
                pairs.append(RightEigenPair(lam, (ZERO, ONE)))
                continue
            pairs.append(RightEigenPair(lam, _qvec_normalize(_qvec_from_complex(basis[:, -1]))))
            continue
        dim = min(max(count, 1), cls.multiplicity)
        if dim == 2:
            # echelon basis of the eigenspace, so coordinate vectors come out clean
            _, _, piv = scipy.linalg.qr(basis.T, pivoting=True)
            rows = piv[:2]
            basis = basis @ np.linalg.inv(basis[rows, :])
            for col in range(2):
                pairs.append(RightEigenPair(lam, _qvec_normalize(_qvec_from_complex(basis[:, col]))))
        else:
            pairs.append(RightEigenPair(lam, _qvec_normalize(_qvec_from_complex(basis[:, -1]))))
    return pairs


def fixed_points(A: QMat2, tol: float = DEFAULT_TOL) -> list[BoundaryPoint]:
    """Boundary fixed points coming from the right eigenvectors.

    Elements whose fixed set is a positive-dimensional sphere report the
    points spanned by a basis of eigenvectors, not the whole sphere.
    """
    points: list[BoundaryPoint] = []
    for pair in right_eigenpairs(A, tol):
        u, w = pair.vector
        vnorm = math.sqrt(u.norm2() + w.norm2())
        p = INF if w.norm() <= tol * vnorm else u / w
        if all(point_distance(p, q) > tol for q in points):
            points.append(p)
    return points


def eigen_structure_oracle(A: QMat2, tol: float = DEFAULT_TOL) -> DynamicalType:
    """Dynamical type read from eigenvalue moduli, angles and diagonalizability.

    This deliberately avoids the characteristic-polynomial invariants so that
    it can serve as an independent check on :func:`quatmoeb.classify.classify`.
    """
    stol = structural_tol(tol)
    classes = similarity_classes(A, tol)
    if len(classes) == 2:
        lo, hi = classes
        r, s = lo.modulus, hi.modulus
        if abs(r - s) <= stol * max(r, s):
            return DynamicalType.TWO_ROTATORY_ELLIPTIC
        if abs(lo.angle - hi.angle) <= stol:
            return DynamicalType.STRETCH if lo.is_real else DynamicalType.ONE_ROTATORY_HYPERBOLIC
        return DynamicalType.TWO_ROTATORY_HYPERBOLIC

    (cls,) = classes
    _, count = _null_space(embed(A), cls.value, tol)
    diagonalizable = count >= (4 if cls.is_real else 2)
    if cls.is_real:
        return DynamicalType.IDENTITY if diagonalizable else DynamicalType.TRANSLATION
    return DynamicalType.ONE_ROTATORY_ELLIPTIC if diagonalizable else DynamicalType.ONE_ROTATORY_PARABOLIC


# ---------------------------------------------------------------------------
# normal form


class NormalFormKind(str, Enum):
    T = "T"
    D_EQUAL_MODULUS = "D_equal_modulus"
    D_DISTINCT_MODULUS = "D_distinct_modulus"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class NormalForm:
    """``S A S^-1 == canonical`` up to ``residual``.

    ``params`` holds ``r, s, theta, phi`` for the diagonal entries
    ``r e^{i theta}`` and ``s e^{i phi}`` (for kind T, ``s == r`` and
    ``phi == theta``).
    """

    kind: NormalFormKind
    canonical: QMat2
    S: QMat2
    S_inv: QMat2
    params: dict = field(default_factory=dict)
    residual: float = 0.0

    @property
    def diagonal(self) -> tuple[complex, complex]:
        return self.canonical.a.to_complex(), self.canonical.d.to_complex()


def _complete_basis(v: QVec) -> tuple[QMat2, QMat2]:
    """A unitary ``P`` with first column ``v`` (unit), and ``P^-1 = P^*``."""
    p, q = v
    if p.norm2() >= q.norm2():
        e = (-(quat.inverse(p.conj()) * q.conj()), ONE)
    else:
        e = (ONE, -(quat.inverse(q.conj()) * p.conj()))
    e1, e2 = _qvec_normalize(e)
    P = QMat2(p, e1, q, e2)
    return P, QMat2(p.conj(), q.conj(), e1.conj(), e2.conj())


def _right_split(q: Quaternion) -> tuple[complex, complex]:
    """``q = b0 + b1 j`` with ``b0, b1`` complex (``j`` on the right)."""
    return complex(q.w, q.x), complex(q.y, q.z)


def _from_right_split(b0: complex, b1: complex) -> Quaternion:
    return Quaternion(b0.real, b0.imag, b1.real, b1.imag)


def _shear(z: Quaternion, S: QMat2, Si: QMat2) -> tuple[QMat2, QMat2]:
    """``(X S, Si X^-1)`` for the shear ``X = [[1, z], [0, 1]]``."""
    return (QMat2(S.a + z * S.c, S.b + z * S.d, S.c, S.d),
            QMat2(Si.a, Si.b - Si.a * z, Si.c, Si.d - Si.c * z))


def _scale(p: Quaternion, q: Quaternion, S: QMat2, Si: QMat2) -> tuple[QMat2, QMat2]:
    """``(D S, Si D^-1)`` for ``D = diag(p, q)``."""
    pi, qi = quat.inverse(p), quat.inverse(q)
    return (QMat2(p * S.a, p * S.b, q * S.c, q * S.d),
            QMat2(Si.a * pi, Si.b * qi, Si.c * pi, Si.d * qi))


def _params(alpha: complex, beta: complex) -> dict:
    return {
        "r": abs(alpha),
        "s": abs(beta),
        "theta": math.atan2(alpha.imag, alpha.real),
        "phi": math.atan2(beta.imag, beta.real),
    }


def normal_form(A: QMat2, tol: float = DEFAULT_TOL) -> NormalForm:
    """Conjugate ``A`` to one of the representatives ``T_{r,t}``, ``D_{r,t,p}``, ``D_{r,s,t,p}``.

    Steps: move an eigenvector to the first basis vector (upper triangular
    form), rotate both diagonal entries into the upper half of C, then remove
    the off-diagonal entry with a shear ``[[1, z], [0, 1]]`` solving
    ``alpha z - z beta = b``.  When the diagonal entries agree only the part of
    ``b`` outside the centralizer of ``alpha`` can be removed; whatever is left
    is scaled to 1.
    """
    M = embed(A)
    check_invertible(A, tol, M)
    stol = structural_tol(tol)
    scale = A.norm()

    lam = classes_of_embedding(M, tol)[0].value
    basis, _ = _null_space(M, lam, tol)
    v = _qvec_normalize(_qvec_from_complex(basis[:, -1]))
    Si, S = _complete_basis(v)
    U = S @ A @ Si

    u1, u2 = quat.conjugator_to_complex(U.a), quat.conjugator_to_complex(U.d)
    # u1, u2 are unit quaternions
    v1, v2 = u1.conj(), u2.conj()
    S, Si = QMat2(u1 * S.a, u1 * S.b, u2 * S.c, u2 * S.d), QMat2(Si.a * v1, Si.b * v2, Si.c * v1, Si.d * v2)
    U = QMat2(u1 * U.a * v1, u1 * U.b * v2, u2 * U.c * v1, u2 * U.d * v2)

    alpha = quat.complex_representative(U.a)
    beta = quat.complex_representative(U.d)
    b0, b1 = _right_split(U.b)

    if abs(alpha - beta) > stol * max(abs(alpha), abs(beta)):
        alpha, beta = _snap(alpha, stol), _snap(beta, stol)
        f0, f1 = alpha - beta, alpha - beta.conjugate()
        if min(abs(f0), abs(f1)) <= tol * max(abs(alpha), abs(beta)):
            raise DegenerateReduction(f"Sylvester factor vanishes for alpha={alpha}, beta={beta}")
        S, Si = _shear(_from_right_split(b0 / f0, b1 / f1), S, Si)
        r, s = abs(alpha), abs(beta)
        if abs(r - s) <= stol * max(r, s):
            kind = NormalFormKind.D_EQUAL_MODULUS
            rm = 0.5 * (r + s)
            alpha, beta = alpha * (rm / r), beta * (rm / s)
        else:
            kind = NormalFormKind.D_DISTINCT_MODULUS
        canonical = QMat2.diag(alpha, beta)
    else:
        alpha = _snap(0.5 * (alpha + beta), stol)
        beta = alpha
        if alpha.imag == 0.0:
            rest = math.hypot(abs(b0), abs(b1))
            y = quat.inverse(U.b) if rest > stol * scale else None
        else:
            f1 = alpha - alpha.conjugate()
            S, Si = _shear(_from_right_split(0j, b1 / f1), S, Si)
            rest = abs(b0)
            y = Quaternion.from_complex(1.0 / b0) if rest > stol * scale else None
        if y is None:
            kind = NormalFormKind.D_EQUAL_MODULUS
            canonical = QMat2.diag(alpha, alpha)
        else:
            S, Si = _scale(y, ONE, S, Si)
            kind = NormalFormKind.T
            canonical = QMat2.of(alpha, 1.0, 0.0, alpha)

    residual = (S @ A @ Si - canonical).norm()
    if not residual <= stol * scale:
        raise DegenerateReduction(f"normal form residual {residual:.3e} exceeds {stol * scale:.3e}")
    return NormalForm(kind, canonical, S, Si, _params(alpha, beta), residual)


def normal_form_shape_ok(nf: NormalForm) -> bool:
    """Whether ``canonical`` has exactly one of the three representative shapes."""
    C = nf.canonical
    entries_complex = all(q.y == 0.0 and q.z == 0.0 for q in (C.a, C.d))
    angles_ok = all(q.x >= 0.0 for q in (C.a, C.d))
    if not (entries_complex and angles_ok and C.c == ZERO):
        return False
    if nf.kind is NormalFormKind.T:
        return C.b == ONE and C.a == C.d
    if C.b != ZERO:
        return False
    ra, rd = C.a.norm(), C.d.norm()
    if nf.kind is NormalFormKind.D_EQUAL_MODULUS:
        return math.isclose(ra, rd, rel_tol=1e-12)
    return ra < rd


def to_json(nf: NormalForm) -> dict:
    return {
        "kind": nf.kind.value,
        "canonical": mat_to_json(nf.canonical),
        "conjugator": mat_to_json(nf.S),
        "residual": nf.residual,
        "params": dict(nf.params),
    }
