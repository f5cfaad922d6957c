"""Centralizer types (z-classes) of GL(2, H).

Two elements share a z-class when their centralizers are conjugate.  Reading
the centralizer off the normal form gives seven possibilities:

    scalar                  r I, r real                GL(2, H)
    real-diag-distinct      diag(r, s), real, r != s   H* + H*
    real-parabolic          T_{r,t}, t in {0, pi}      [[a, b], [0, a]], a in H*, b in H
    complex-parabolic       T_{r,t}, 0 < t < pi        [[a, b], [0, a]], a in C*, b in C
    complex-diag-distinct   diag(l, m), l, m not real, not similar   C* + C*
    mixed-diag              diag(l, r), exactly one real           C* + H* (in either order)
    complex-scalar          diag(l, l), l not real     GL(2, C)
"""

from __future__ import annotations

from enum import Enum
import math

import numpy as np

from .dynamics import DynamicalType
from .qmat2 import QMat2, is_singular
from .quat import DEFAULT_TOL, ZERO, Quaternion, exp_i
from .spectral import NormalFormKind, normal_form


class ZClassType(str, Enum):
    SCALAR = "scalar"
    REAL_DIAG_DISTINCT = "real-diag-distinct"
    REAL_PARABOLIC = "real-parabolic"
    COMPLEX_PARABOLIC = "complex-parabolic"
    COMPLEX_DIAG_DISTINCT = "complex-diag-distinct"
    MIXED_DIAG = "mixed-diag"
    COMPLEX_SCALAR = "complex-scalar"

    def __str__(self) -> str:
        return self.value


# Dynamical type -> z-classes it can land in.  The two 2-rotatory types split
# further: diag(1, -1) is elliptic and diag(2, -1) hyperbolic, yet both have
# real distinct diagonal entries and centralizer H* + H*.
DTYPE_TO_ZCLASSES = {
    DynamicalType.IDENTITY: {ZClassType.SCALAR},
    DynamicalType.STRETCH: {ZClassType.REAL_DIAG_DISTINCT},
    DynamicalType.TRANSLATION: {ZClassType.REAL_PARABOLIC},
    DynamicalType.ONE_ROTATORY_PARABOLIC: {ZClassType.COMPLEX_PARABOLIC},
    DynamicalType.ONE_ROTATORY_ELLIPTIC: {ZClassType.COMPLEX_SCALAR},
    DynamicalType.ONE_ROTATORY_HYPERBOLIC: {ZClassType.COMPLEX_DIAG_DISTINCT},
    DynamicalType.TWO_ROTATORY_ELLIPTIC: {ZClassType.COMPLEX_DIAG_DISTINCT, ZClassType.MIXED_DIAG,
                                          ZClassType.REAL_DIAG_DISTINCT},
    DynamicalType.TWO_ROTATORY_HYPERBOLIC: {ZClassType.COMPLEX_DIAG_DISTINCT, ZClassType.MIXED_DIAG,
                                            ZClassType.REAL_DIAG_DISTINCT},
}


def zclass_of(A: QMat2, tol: float = DEFAULT_TOL, return_conjugator: bool = False):
    """z-class of ``A``; with ``return_conjugator`` also the normal form.

    The centralizer of ``A`` is ``S^-1 Z(canonical) S`` with ``S`` taken from
    the returned normal form.
    """
    nf = normal_form(A, tol)
    alpha, beta = nf.diagonal
    real_a, real_b = alpha.imag == 0.0, beta.imag == 0.0
    if nf.kind is NormalFormKind.T:
        zc = ZClassType.REAL_PARABOLIC if real_a else ZClassType.COMPLEX_PARABOLIC
    elif real_a and real_b:
        zc = ZClassType.SCALAR if alpha == beta else ZClassType.REAL_DIAG_DISTINCT
    elif real_a or real_b:
        zc = ZClassType.MIXED_DIAG
    else:
        zc = ZClassType.COMPLEX_SCALAR if alpha == beta else ZClassType.COMPLEX_DIAG_DISTINCT
    return (zc, nf) if return_conjugator else zc


_LAMBDA = exp_i(math.pi / 3)
_MU = exp_i(math.pi / 4)

_REPRESENTATIVES = {
    ZClassType.SCALAR: QMat2.identity(),
    ZClassType.REAL_DIAG_DISTINCT: QMat2.diag(2.0, 1.0),
    ZClassType.REAL_PARABOLIC: QMat2.of(1.0, 1.0, 0.0, 1.0),
    ZClassType.COMPLEX_PARABOLIC: QMat2(_LAMBDA, Quaternion(1.0, 0.0, 0.0, 0.0), ZERO, _LAMBDA),
    ZClassType.COMPLEX_DIAG_DISTINCT: QMat2.diag(_LAMBDA, _MU),
    ZClassType.MIXED_DIAG: QMat2.diag(_LAMBDA, 1.0),
    ZClassType.COMPLEX_SCALAR: QMat2.diag(_LAMBDA, _LAMBDA),
}


def representative(zc: ZClassType) -> QMat2:
    """Standard representative, with ``lambda = e^{i pi/3}`` and ``mu = e^{i pi/4}``."""
    return _REPRESENTATIVES[ZClassType(zc)]


def in_centralizer(A: QMat2, B: QMat2, tol: float = DEFAULT_TOL) -> bool:
    return (A @ B - B @ A).norm() <= tol * A.norm() * B.norm()


def _quat(rng) -> Quaternion:
    return Quaternion(*rng.uniform(-2.0, 2.0, 4))


def _cplx(rng) -> Quaternion:
    w, x = rng.uniform(-2.0, 2.0, 2)
    return Quaternion(w, x, 0.0, 0.0)


_SAMPLERS = {
    ZClassType.SCALAR: lambda g: QMat2(_quat(g), _quat(g), _quat(g), _quat(g)),
    ZClassType.REAL_DIAG_DISTINCT: lambda g: QMat2(_quat(g), ZERO, ZERO, _quat(g)),
    ZClassType.REAL_PARABOLIC: lambda g: (lambda a: QMat2(a, _quat(g), ZERO, a))(_quat(g)),
    ZClassType.COMPLEX_PARABOLIC: lambda g: (lambda a: QMat2(a, _cplx(g), ZERO, a))(_cplx(g)),
    ZClassType.COMPLEX_DIAG_DISTINCT: lambda g: QMat2(_cplx(g), ZERO, ZERO, _cplx(g)),
    ZClassType.MIXED_DIAG: lambda g: QMat2(_cplx(g), ZERO, ZERO, _quat(g)),
    ZClassType.COMPLEX_SCALAR: lambda g: QMat2(_cplx(g), _cplx(g), _cplx(g), _cplx(g)),
}


def sample_centralizer(zc: ZClassType, seed: int, tol: float = DEFAULT_TOL) -> QMat2:
    """A seeded random invertible element commuting with ``representative(zc)``."""
    rng = np.random.default_rng(seed)
    draw = _SAMPLERS[ZClassType(zc)]
    while True:
        B = draw(rng)
        if not is_singular(B, tol):
            return B


def centralizer_element(A: QMat2, seed: int, tol: float = DEFAULT_TOL) -> QMat2:
    """A seeded random invertible element commuting with ``A`` itself.

    Samples the centralizer of the normal form and conjugates back.  Only the
    shape of the centralizer is used, so this also works when the normal form
    differs from the standard representative of its class.
    """
    zc, nf = zclass_of(A, tol, return_conjugator=True)
    B = sample_centralizer(zc, seed, tol)
    if zc is ZClassType.MIXED_DIAG and nf.canonical.a.imag == ZERO:
        # the real entry comes first here, the standard representative has it second
        B = QMat2(B.d, ZERO, ZERO, B.a)
    return nf.S_inv @ B @ nf.S
