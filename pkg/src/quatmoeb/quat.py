"""Quaternion arithmetic.

Quaternions are immutable value objects ``w + x i + y j + z k`` with Hamilton
multiplication.  The subspace spanned by ``{1, i}`` plays the role of the
complex numbers, and every quaternion splits uniquely as ``c0 + j c1`` with
``c0, c1`` complex and ``j`` written on the left; this is the splitting used
by the complex 4x4 embedding in :mod:`quatmoeb.qmat2`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Real

from .errors import DivisionByZero

DEFAULT_TOL = 1e-9


@dataclass(frozen=True, slots=True)
class Quaternion:
    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    # -- construction -----------------------------------------------------

    @classmethod
    def from_complex(cls, c: complex) -> Quaternion:
        c = complex(c)
        return cls(c.real, c.imag, 0.0, 0.0)

    @classmethod
    def coerce(cls, value) -> Quaternion:
        """Accept a Quaternion, a real/complex number or a length-4 sequence."""
        if isinstance(value, Quaternion):
            return value
        if isinstance(value, Real):
            return cls(float(value))
        if isinstance(value, complex):
            return cls.from_complex(value)
        w, x, y, z = value
        return cls(float(w), float(x), float(y), float(z))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            other = Quaternion.coerce(other)
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            other = Quaternion.coerce(other)
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __rsub__(self, other):
        return Quaternion.coerce(other) - self

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if not isinstance(other, Quaternion):
            if isinstance(other, Real):
                s = float(other)
                return Quaternion(self.w * s, self.x * s, self.y * s, self.z * s)
            other = Quaternion.coerce(other)
        a1, b1, c1, d1 = self.w, self.x, self.y, self.z
        a2, b2, c2, d2 = other.w, other.x, other.y, other.z
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other):
        if isinstance(other, Real):
            return self * other
        return Quaternion.coerce(other) * self

    def __truediv__(self, other):
        # p / q means p * q^-1
        if isinstance(other, Real):
            if other == 0:
                raise DivisionByZero("quaternion division by zero")
            return self * (1.0 / float(other))
        return self * inverse(Quaternion.coerce(other))

    def __abs__(self) -> float:
        return self.norm()

    # -- unary helpers ----------------------------------------------------

    def conj(self) -> Quaternion:
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm2(self) -> float:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def norm(self) -> float:
        return math.hypot(self.w, self.x, self.y, self.z)

    @property
    def real(self) -> float:
        return self.w

    @property
    def imag(self) -> Quaternion:
        return Quaternion(0.0, self.x, self.y, self.z)

    def inverse(self) -> Quaternion:
        return inverse(self)

    def is_real(self, tol: float = 0.0) -> bool:
        return math.hypot(self.x, self.y, self.z) <= tol * max(1.0, abs(self.w))

    def is_complex(self, tol: float = 0.0) -> bool:
        """True when the j and k components vanish (within ``tol``)."""
        return math.hypot(self.y, self.z) <= tol * max(1.0, self.norm())

    def to_complex(self) -> complex:
        """Project onto span{1, i}, discarding the j and k parts."""
        return complex(self.w, self.x)

    def to_list(self) -> list[float]:
        return [self.w, self.x, self.y, self.z]

    def __iter__(self):
        return iter((self.w, self.x, self.y, self.z))

    def __repr__(self) -> str:
        w, x, y, z = (float(v) for v in self)
        return f"Quaternion({w!r}, {x!r}, {y!r}, {z!r})"


ZERO = Quaternion(0.0, 0.0, 0.0, 0.0)
ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def mul(p: Quaternion, q: Quaternion) -> Quaternion:
    return p * q


def conj(q: Quaternion) -> Quaternion:
    return q.conj()


def norm(q: Quaternion) -> float:
    return q.norm()


def real_part(q: Quaternion) -> float:
    return q.w


def imag_part(q: Quaternion) -> Quaternion:
    return q.imag


def inverse(q: Quaternion) -> Quaternion:
    # rescale first so that |q|^2 neither underflows nor overflows
    m = max(abs(q.w), abs(q.x), abs(q.y), abs(q.z))
    if m == 0.0:
        raise DivisionByZero("inverse of the zero quaternion")
    w, x, y, z = q.w / m, q.x / m, q.y / m, q.z / m
    n2 = (w * w + x * x + y * y + z * z) * m
    return Quaternion(w / n2, -x / n2, -y / n2, -z / n2)


def exp_i(theta: float, r: float = 1.0) -> Quaternion:
    """The complex number ``r e^{i theta}`` as a quaternion."""
    return Quaternion(r * math.cos(theta), r * math.sin(theta), 0.0, 0.0)


def similar(p: Quaternion, q: Quaternion, tol: float = DEFAULT_TOL) -> bool:
    """Whether ``q = v p v^-1`` for some nonzero ``v``.

    Two quaternions are similar exactly when they share real part and norm.
    """
    np_, nq = p.norm(), q.norm()
    scale = max(1.0, np_, nq)
    return abs(p.w - q.w) <= tol * scale and abs(np_ - nq) <= tol * scale


def complex_representative(q: Quaternion) -> complex:
    """The element ``Re q + |Im q| i`` of the similarity class of ``q``."""
    return complex(q.w, math.hypot(q.x, q.y, q.z))


def conjugator_to_complex(q: Quaternion) -> Quaternion:
    """A unit quaternion ``u`` with ``u q u^-1 == complex_representative(q)``.

    The imaginary direction ``n = Im q / |Im q|`` is rotated onto ``i`` by
    ``u = normalize(1 - i n)``.  That formula degenerates at ``n = -i``; for
    directions in the hemisphere around ``-i`` we first flip with ``j``
    (``j (-i) j^-1 = i``) and then rotate the flipped direction.
    """
    vnorm = math.hypot(q.x, q.y, q.z)
    if vnorm == 0.0:
        return ONE
    n = Quaternion(0.0, q.x / vnorm, q.y / vnorm, q.z / vnorm)
    flip = n.x < 0.0
    if flip:
        n = J * n * J.conj()
    t = ONE - I * n  # Re t = 1 + n.x >= 1
    u = t * (1.0 / t.norm())
    return u * J if flip else u


def split(q: Quaternion) -> tuple[complex, complex]:
    """Return ``(c0, c1)`` with ``q = c0 + j c1``.

    Because ``j (y - z i) = y j + z k``, the second component carries the
    k-coefficient with a minus sign on its imaginary part.
    """
    return complex(q.w, q.x), complex(q.y, -q.z)


def reassemble(c0: complex, c1: complex) -> Quaternion:
    """Inverse of :func:`split`: build ``c0 + j c1``."""
    return Quaternion(c0.real, c0.imag, c1.real, -c1.imag)


def to_json(q: Quaternion) -> list[float]:
    return q.to_list()


def from_json(data) -> Quaternion:
    if not isinstance(data, (list, tuple)) or len(data) != 4:
        raise ValueError(f"quaternion must be an array of four numbers, got {data!r}")
    for v in data:
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise ValueError(f"quaternion component is not a number: {v!r}")
        if not math.isfinite(v):
            raise ValueError(f"quaternion component is not finite: {v!r}")
    return Quaternion(*(float(v) for v in data))
