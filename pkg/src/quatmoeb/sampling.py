"""Seeded random matrices for cross-checks and property tests.

Matrices with i.i.d. uniform entries are almost always 2-rotatory
hyperbolic, so the cross-check generator mixes them with conjugated normal
forms of every dynamical type.
"""

from __future__ import annotations

import math

import numpy as np

from .classify import classify
from .dynamics import DynamicalType
from .errors import QuatMoebError
from .qmat2 import QMat2, embed
from .quat import Quaternion, exp_i

# |det A_C| below this is treated as too close to singular for a cross-check
DET_FLOOR = 1e-6
# margins closer than this (relative) to a decision surface are skipped
CHECK_GUARD = 1e-4


def random_quaternion(rng: np.random.Generator, bound: float = 2.0) -> Quaternion:
    return Quaternion(*rng.uniform(-bound, bound, 4))


def random_matrix(rng: np.random.Generator, bound: float = 2.0) -> QMat2:
    """Entries with i.i.d. components uniform on ``[-bound, bound]``, rejecting near-singular draws."""
    while True:
        A = QMat2(*(random_quaternion(rng, bound) for _ in range(4)))
        if abs(np.linalg.det(embed(A))) >= DET_FLOOR:
            return A


def random_conjugator(rng: np.random.Generator, max_cond: float = 50.0) -> QMat2:
    """A random invertible matrix whose embedding has condition number at most ``max_cond``."""
    while True:
        S = random_matrix(rng)
        if np.linalg.cond(embed(S)) <= max_cond:
            return S


def _modulus_pair(rng) -> tuple[float, float]:
    r = rng.uniform(0.5, 2.0)
    return r, r * rng.uniform(1.25, 3.0)


def _angle(rng) -> float:
    return rng.uniform(0.15, math.pi - 0.15)


def _distinct_angles(rng) -> tuple[float, float]:
    while True:
        t, p = rng.uniform(0.0, math.pi, 2)
        if abs(t - p) > 0.1:
            return t, p


def canonical_of_type(dtype: DynamicalType, rng: np.random.Generator) -> QMat2:
    """A random normal-form matrix of the given dynamical type."""
    dtype = DynamicalType(dtype)
    if dtype is DynamicalType.TWO_ROTATORY_HYPERBOLIC:
        r, s = _modulus_pair(rng)
        roll = rng.integers(3)
        if roll == 0:
            t, p = _distinct_angles(rng)
        elif roll == 1:
            # c1 == c3 here although the element is hyperbolic
            t = _angle(rng)
            p = math.pi - t
        else:
            t, p = (0.0, math.pi) if rng.integers(2) else (math.pi, 0.0)
        if rng.integers(2):
            r, s = s, r
        return QMat2.diag(exp_i(t, r), exp_i(p, s))
    if dtype is DynamicalType.TWO_ROTATORY_ELLIPTIC:
        r = rng.uniform(0.5, 2.0)
        t, p = _distinct_angles(rng)
        return QMat2.diag(exp_i(t, r), exp_i(p, r))
    if dtype is DynamicalType.ONE_ROTATORY_HYPERBOLIC:
        r, s = _modulus_pair(rng)
        t = _angle(rng)
        return QMat2.diag(exp_i(t, r), exp_i(t, s))
    if dtype is DynamicalType.STRETCH:
        r, s = _modulus_pair(rng)
        sign = -1.0 if rng.integers(2) else 1.0
        return QMat2.diag(sign * r, sign * s)
    if dtype is DynamicalType.TRANSLATION:
        r = rng.uniform(0.5, 2.0) * (-1.0 if rng.integers(2) else 1.0)
        return QMat2.of(r, 1.0, 0.0, r)
    if dtype is DynamicalType.ONE_ROTATORY_ELLIPTIC:
        lam = exp_i(_angle(rng), rng.uniform(0.5, 2.0))
        return QMat2.diag(lam, lam)
    if dtype is DynamicalType.ONE_ROTATORY_PARABOLIC:
        lam = exp_i(_angle(rng), rng.uniform(0.5, 2.0))
        return QMat2.of(lam, 1.0, 0.0, lam)
    r = rng.uniform(0.5, 2.0) * (-1.0 if rng.integers(2) else 1.0)
    return QMat2.diag(r, r)


def conjugated_of_type(dtype: DynamicalType, rng: np.random.Generator) -> QMat2:
    """``S C S^-1`` for a random normal form ``C`` of type ``dtype`` and a random ``S``."""
    C = canonical_of_type(dtype, rng)
    S = random_conjugator(rng)
    return S @ C @ S.inverse()


def check_matrix(rng: np.random.Generator, tol: float = 1e-9) -> QMat2:
    """One draw for the classifier-versus-oracle comparison."""
    return check_sample(rng, tol)[0]


def check_sample(rng: np.random.Generator, tol: float = 1e-9):
    """``(A, classify(A))`` for one cross-check draw.

    Half the draws are i.i.d. uniform matrices, the rest conjugated normal
    forms of a uniformly chosen type.  Near-singular and borderline draws are
    rejected so the comparison is well posed.
    """
    types = list(DynamicalType)
    while True:
        if rng.random() < 0.5:
            A = random_matrix(rng)
        else:
            A = conjugated_of_type(types[rng.integers(len(types))], rng)
        if abs(np.linalg.det(embed(A))) < DET_FLOOR:
            continue
        try:
            report = classify(A, tol, guard=CHECK_GUARD)
        except QuatMoebError:
            continue
        if not report.borderline:
            return A, report
