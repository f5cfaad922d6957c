import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quatmoeb.classify import classify
from quatmoeb.dynamics import DynamicalType as DT
from quatmoeb.qmat2 import QMat2
from quatmoeb.quat import I, J, Quaternion, exp_i
from quatmoeb.sampling import conjugated_of_type, random_conjugator, random_matrix
from quatmoeb.zclass import (DTYPE_TO_ZCLASSES, ZClassType as ZC, centralizer_element, in_centralizer,
                             representative, sample_centralizer, zclass_of)

PI = math.pi
LAM, MU = exp_i(PI / 3), exp_i(PI / 4)


@pytest.mark.parametrize("A, zc", [
    (QMat2.identity(), ZC.SCALAR),
    (QMat2.diag(2, 1), ZC.REAL_DIAG_DISTINCT),
    (QMat2.of(1, 1, 0, 1), ZC.REAL_PARABOLIC),
    (QMat2.diag(LAM, 1), ZC.MIXED_DIAG),
    (QMat2.diag(LAM, LAM), ZC.COMPLEX_SCALAR),
    (QMat2.diag(LAM, MU), ZC.COMPLEX_DIAG_DISTINCT),
    (QMat2.of(LAM, 1, 0, LAM), ZC.COMPLEX_PARABOLIC),
    (QMat2.diag(-3, -3), ZC.SCALAR),
    (QMat2.diag(1, -1), ZC.REAL_DIAG_DISTINCT),
    (QMat2.of(-2, 1, 0, -2), ZC.REAL_PARABOLIC),
    (QMat2.diag(I, J), ZC.COMPLEX_SCALAR),
    (QMat2.diag(exp_i(PI / 3, 2), LAM), ZC.COMPLEX_DIAG_DISTINCT),
    (QMat2.of(exp_i(2.0, 3), 1, 0, exp_i(2.0, 3)), ZC.COMPLEX_PARABOLIC),
])
def test_zclass_examples(A, zc):
    assert zclass_of(A) is zc


def test_serialised_names():
    assert [z.value for z in ZC] == ["scalar", "real-diag-distinct", "real-parabolic", "complex-parabolic",
                                    "complex-diag-distinct", "mixed-diag", "complex-scalar"]


def test_representatives_are_pairwise_distinct_classes():
    got = [zclass_of(representative(z)) for z in ZC]
    assert got == list(ZC)


def test_in_centralizer_examples():
    B = QMat2.of(Quaternion(1, 2, 3, 4), J, I, 2)
    assert in_centralizer(QMat2.identity(), B)
    assert in_centralizer(QMat2.of(1, 1, 0, 1), QMat2.diag(I, I))
    assert not in_centralizer(QMat2.diag(I, J), QMat2.of(0, 1, 1, 0))


@pytest.mark.parametrize("zc", list(ZC))
def test_samplers_commute_with_representatives(zc):
    R = representative(zc)
    for seed in range(100):
        assert in_centralizer(R, sample_centralizer(zc, seed), 1e-9)


def test_sampler_is_deterministic_per_seed():
    assert sample_centralizer(ZC.MIXED_DIAG, 5) == sample_centralizer(ZC.MIXED_DIAG, 5)
    assert sample_centralizer(ZC.MIXED_DIAG, 5) != sample_centralizer(ZC.MIXED_DIAG, 6)


def test_generic_centralizers_are_not_too_big():
    # a generic quaternionic matrix does not commute with the smaller classes
    rng = np.random.default_rng(3)
    for zc in ZC:
        if zc is ZC.SCALAR:
            continue
        assert not in_centralizer(representative(zc), random_matrix(rng))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.sampled_from(list(DT)))
def test_conjugation_invariance(seed, dtype):
    rng = np.random.default_rng(seed)
    A = conjugated_of_type(dtype, rng)
    S = random_conjugator(rng)
    if classify(A).borderline:
        return
    assert zclass_of(A) is zclass_of(S @ A @ S.inverse())


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.sampled_from(list(DT)), st.integers(0, 1000))
def test_centralizer_of_conjugated_elements(seed, dtype, draw):
    A = conjugated_of_type(dtype, np.random.default_rng(seed))
    B = centralizer_element(A, draw)
    assert in_centralizer(A, B, 1e-7)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.sampled_from(list(DT)))
def test_zclass_refines_consistently_with_dtype(seed, dtype):
    A = conjugated_of_type(dtype, np.random.default_rng(seed))
    report = classify(A)
    if report.borderline:
        return
    assert zclass_of(A) in DTYPE_TO_ZCLASSES[report.dtype]


def test_return_conjugator():
    zc, nf = zclass_of(QMat2.diag(2, 1), return_conjugator=True)
    assert zc is ZC.REAL_DIAG_DISTINCT
    assert (nf.S @ QMat2.diag(2, 1) @ nf.S_inv - nf.canonical).norm() < 1e-12
