"""Linear-fractional action of GL(2, H) on the boundary sphere H u {oo}.

A matrix ``[[a, b], [c, d]]`` acts by ``Z -> (aZ + b)(cZ + d)^-1``.  Inversions
in 3-spheres and reflections in hyperplanes are orientation reversing; they
are carried around as a matrix together with a flag meaning "conjugate the
argument first", i.e. ``Z -> (a conj(Z) + b)(c conj(Z) + d)^-1``.  Composing
two reversing maps clears the flag and yields an honest matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from . import quat
from .qmat2 import QMat2, mat_inverse
from .quat import DEFAULT_TOL, ONE, ZERO, Quaternion


class _Infinity:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()
BoundaryPoint = Union[Quaternion, _Infinity]


def is_inf(p) -> bool:
    return p is INF


def point_to_json(p: BoundaryPoint):
    return "inf" if p is INF else p.to_list()


def point_from_json(data) -> BoundaryPoint:
    if isinstance(data, str):
        if data.lower() in ("inf", "infinity", "oo"):
            return INF
        raise ValueError(f"unknown boundary point {data!r}")
    return quat.from_json(data)


def point_distance(p: BoundaryPoint, q: BoundaryPoint) -> float:
    """Chordal distance on the 4-sphere; the point at infinity is handled."""
    if p is INF and q is INF:
        return 0.0
    if p is INF:
        p, q = q, p
    if q is INF:
        return 2.0 / (1.0 + p.norm2()) ** 0.5
    return 2.0 * (p - q).norm() / ((1.0 + p.norm2()) * (1.0 + q.norm2())) ** 0.5


def apply(A: QMat2, Z: BoundaryPoint, tol: float = DEFAULT_TOL) -> BoundaryPoint:
    """Image of ``Z`` under the linear-fractional map of ``A``.

    Points with ``|Z| > 1`` are evaluated in the chart ``W = Z^-1`` using
    ``(aZ + b)(cZ + d)^-1 = (a + bW)(c + dW)^-1``.
    """
    if Z is INF:
        if A.c.norm() > tol * A.norm():
            return A.a / A.c
        return INF
    if Z.norm2() <= 1.0:
        num = A.a * Z + A.b
        den = A.c * Z + A.d
        ref = A.c.norm() * Z.norm() + A.d.norm()
    else:
        W = quat.inverse(Z)
        num = A.a + A.b * W
        den = A.c + A.d * W
        ref = A.c.norm() + A.d.norm() * W.norm()
    if den.norm() <= tol * ref:
        return INF
    return num / den


@dataclass(frozen=True)
class Inversion:
    """Inversion in the 3-sphere ``|Z - center| = radius``."""

    center: Quaternion
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError(f"inversion radius must be positive, got {self.radius!r}")

    def __call__(self, Z: BoundaryPoint, tol: float = DEFAULT_TOL) -> BoundaryPoint:
        return apply_inversion(self, Z, tol)

    def flagged(self) -> FlaggedMap:
        a, r = self.center, self.radius
        return FlaggedMap(QMat2(a, ONE * (r * r) - a * a.conj(), ONE, -a.conj()), True)


@dataclass(frozen=True)
class Reflection:
    """Reflection ``Z -> base - unit (conj(Z) - conj(base)) unit`` in a hyperplane."""

    unit: Quaternion
    base: Quaternion = ZERO
    tol: float = field(default=DEFAULT_TOL, compare=False)

    def __post_init__(self):
        if abs(self.unit.norm() - 1.0) > self.tol:
            raise ValueError(f"reflection needs a unit quaternion, |unit| = {self.unit.norm()!r}")

    def __call__(self, Z: BoundaryPoint, tol: float = DEFAULT_TOL) -> BoundaryPoint:
        return apply_reflection(self, Z)

    def flagged(self) -> FlaggedMap:
        lam, a = self.unit, self.base
        return FlaggedMap(QMat2(-lam, lam * a.conj() + a * lam.conj(), ZERO, lam.conj()), True)


def apply_inversion(inv: Inversion, Z: BoundaryPoint, tol: float = DEFAULT_TOL) -> BoundaryPoint:
    a, r = inv.center, inv.radius
    if Z is INF:
        return a
    diff = Z - a
    if diff.norm() <= tol * max(1.0, a.norm(), r):
        return INF
    return a + quat.inverse(diff.conj()) * (r * r)


def apply_reflection(ref: Reflection, Z: BoundaryPoint) -> BoundaryPoint:
    if Z is INF:
        return INF
    lam, a = ref.unit, ref.base
    return a - lam * (Z - a).conj() * lam


def conjugate_action(M: QMat2) -> QMat2:
    """Matrix of ``Z -> conj(M . conj(Z))``.

    With ``M = [[a, b], [c, d]]`` this map is ``(Z c* + d*)^-1 (Z a* + b*)``,
    the inverse of the left action of ``[[d*, -b*], [-c*, a*]]``.  It is not
    the entrywise conjugate of ``M`` because quaternions do not commute.
    """
    N = QMat2(M.d.conj(), -M.b.conj(), -M.c.conj(), M.a.conj())
    return mat_inverse(N)


@dataclass(frozen=True)
class FlaggedMap:
    """``Z -> matrix . Z`` or, if ``conjugate``, ``Z -> matrix . conj(Z)``."""

    matrix: QMat2
    conjugate: bool = False

    def __call__(self, Z: BoundaryPoint, tol: float = DEFAULT_TOL) -> BoundaryPoint:
        if self.conjugate and Z is not INF:
            Z = Z.conj()
        return apply(self.matrix, Z, tol)

    def then(self, second: FlaggedMap) -> FlaggedMap:
        """The composite ``second o self``."""
        inner = conjugate_action(self.matrix) if second.conjugate else self.matrix
        return FlaggedMap(second.matrix @ inner, self.conjugate != second.conjugate)


def _as_flagged(m) -> FlaggedMap:
    if isinstance(m, FlaggedMap):
        return m
    if isinstance(m, QMat2):
        return FlaggedMap(m, False)
    return m.flagged()


def compose_inversions(first, second) -> QMat2:
    """Matrix ``M`` with ``apply(M, Z) == second(first(Z))``.

    Both arguments are inversions or reflections (anything exposing
    ``flagged()``); the composite of two orientation-reversing maps is
    orientation preserving, so an ordinary matrix comes back.
    """
    comp = _as_flagged(first).then(_as_flagged(second))
    if comp.conjugate:
        raise ValueError("composite is orientation reversing; no GL(2,H) matrix represents it")
    return comp.matrix


@dataclass(frozen=True)
class Orbit:
    """Forward orbit; ``pole_pass`` is the index of the iterate that hit a pole."""

    points: tuple
    pole_pass: int | None = None

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]


def orbit(A: QMat2, Z0: BoundaryPoint, n: int, tol: float = DEFAULT_TOL) -> Orbit:
    """``Z0, A Z0, ..., A^n Z0``, stopping early if a finite iterate is sent to infinity."""
    if n < 1:
        raise ValueError("orbit length must be at least 1")
    pts = [Z0]
    Z = Z0
    for k in range(1, n + 1):
        nxt = apply(A, Z, tol)
        if nxt is INF and Z is not INF:
            pts.append(nxt)
            return Orbit(tuple(pts), pole_pass=k)
        pts.append(nxt)
        Z = nxt
    return Orbit(tuple(pts))
