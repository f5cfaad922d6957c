import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quatmoeb.moebius import (INF, FlaggedMap, Inversion, Reflection, apply, compose_inversions, orbit,
                              point_distance, point_from_json, point_to_json)
from quatmoeb.qmat2 import QMat2, embed, is_singular
from quatmoeb.quat import I, J, ONE, ZERO, Quaternion, exp_i

from conftest import matrices, nonzero_quaternions, qclose, quaternions, unit_quaternions

radii = st.floats(0.2, 3.0)


def _same(p, q, tol):
    if p is INF or q is INF:
        return p is q
    return (p - q).norm() <= tol


def _proportional(M, N, tol=1e-12):
    """Whether M = t N for some real t != 0."""
    t = None
    for m, n in zip(M.entries(), N.entries()):
        if n.norm() > 1e-12:
            t = m.w / n.w if abs(n.w) > 1e-12 else m.norm() / n.norm()
            break
    return t is not None and (M - t * N).norm() <= tol * M.norm()


def test_apply_examples():
    assert apply(QMat2.of(1, 1, 0, 1), I) == Quaternion(1, 1, 0, 0)
    assert apply(QMat2.of(0, 1, 1, 0), J) == -J
    assert apply(QMat2.of(0, 1, 1, 0), INF) == ZERO
    assert apply(QMat2.of(0, 1, 1, 0), ZERO) is INF
    assert apply(QMat2.diag(2, 1), INF) is INF


def test_apply_far_from_origin_uses_second_chart():
    Z = Quaternion(1e200, 0, 0, 0)
    assert apply(QMat2.diag(2, 1), Z) == Quaternion(2e200, 0, 0, 0)
    assert apply(QMat2.of(0, 1, 1, 0), Z) == Quaternion(1e-200, 0, 0, 0)


def test_inversion_and_reflection_examples():
    unit = Inversion(ZERO, 1.0)
    assert unit(Quaternion(2, 0, 0, 0)) == Quaternion(0.5, 0, 0, 0)
    assert unit(J) == J
    q = Quaternion(1, 2, 3, 4)
    assert Reflection(ONE)(q) == -q.conj()
    assert unit(ZERO) is INF and unit(INF) == ZERO
    assert Reflection(ONE)(INF) is INF


def test_generator_validation():
    with pytest.raises(ValueError):
        Inversion(ZERO, 0.0)
    with pytest.raises(ValueError):
        Reflection(Quaternion(2, 0, 0, 0))


def test_two_concentric_inversions_give_a_dilation():
    M = compose_inversions(Inversion(ZERO, 1.0), Inversion(ZERO, math.sqrt(2)))
    assert _proportional(M, QMat2.diag(2, 1))
    for Z in (Quaternion(1, 0, 0, 0), Quaternion(0, 1, 2, 0), Quaternion(-1, 0.5, 0, 3)):
        assert qclose(apply(M, Z), 2.0 * Z, 1e-12)


def test_reflection_twice_is_the_identity():
    M = compose_inversions(Reflection(ONE), Reflection(ONE))
    assert _proportional(M, QMat2.identity())


@given(nonzero_quaternions)
def test_parallel_reflections_give_a_translation(b):
    u = b * (1.0 / b.norm())
    M = compose_inversions(Reflection(u), Reflection(u, b * 0.5))
    assert _proportional(M, QMat2.of(1, b, 0, 1), 1e-12)


@given(quaternions, radii, quaternions)
def test_inversion_is_an_involution(a, r, Z):
    inv = Inversion(a, r)
    once = inv(Z)
    if once is INF:
        return
    assert _same(inv(once), Z, 1e-9 * (1 + Z.norm2()))


@given(quaternions, radii, quaternions)
def test_inversion_matrix_form(a, r, Z):
    fm = Inversion(a, r).flagged()
    direct, via = Inversion(a, r)(Z), fm(Z)
    if direct is INF or via is INF or (Z - a).norm() < 1e-3:
        return
    assert qclose(direct, via, 1e-9 * (1 + direct.norm2()))


@given(unit_quaternions, quaternions, quaternions)
def test_reflection_matrix_form(u, a, Z):
    assert qclose(Reflection(u, a)(Z), Reflection(u, a).flagged()(Z), 1e-9 * (1 + Z.norm2() + a.norm2()))


@given(unit_quaternions, quaternions, quaternions)
def test_reflection_is_an_involution(u, a, Z):
    ref = Reflection(u, a)
    assert qclose(ref(ref(Z)), Z, 1e-9 * (1 + Z.norm2() + a.norm2()))


generators = st.one_of(
    st.builds(Inversion, quaternions, radii),
    st.builds(Reflection, unit_quaternions, quaternions),
)


@settings(max_examples=200)
@given(generators, generators, quaternions)
def test_composition_matches_pointwise(first, second, Z):
    M = compose_inversions(first, second)
    mid = first(Z)
    expected = second(mid)
    got = apply(M, Z)
    if expected is INF or got is INF:
        return
    assert point_distance(got, expected) <= 1e-8


def test_flagged_composition_is_not_entrywise_conjugation():
    # interleaving a plain matrix with a conjugate-linear map needs the
    # conjugate action, not the entrywise conjugate matrix
    A = QMat2.of(Quaternion(1, 2, 0, 1), J, Quaternion(0, 1, 1, 0), Quaternion(2, 0, 0, -1))
    ref = Reflection(ONE).flagged()
    comp = FlaggedMap(A).then(ref)
    assert comp.conjugate
    Z = Quaternion(0.3, -0.2, 0.7, 0.1)
    assert qclose(comp(Z), ref(apply(A, Z)), 1e-12)
    wrong = FlaggedMap(ref.matrix @ QMat2(A.a.conj(), A.b.conj(), A.c.conj(), A.d.conj()), True)
    assert not qclose(wrong(Z), ref(apply(A, Z)), 1e-3)


@given(matrices, matrices, quaternions)
def test_action_is_a_homomorphism(A, B, Z):
    if is_singular(A, 1e-6) or is_singular(B, 1e-6):
        return
    lhs, rhs = apply(A @ B, Z), apply(A, apply(B, Z))
    if lhs is INF or rhs is INF:
        return
    cond = np.linalg.cond(embed(A)) * np.linalg.cond(embed(B))
    assert point_distance(lhs, rhs) <= 1e-8 * cond


@given(matrices, st.floats(-50, 50).filter(lambda t: abs(t) > 1e-3), quaternions)
def test_action_is_projective(A, lam, Z):
    if is_singular(A, 1e-6):
        return
    p, q = apply(A, Z), apply(lam * A, Z)
    assert (p is INF) == (q is INF)
    if p is not INF:
        assert point_distance(p, q) <= 1e-12


def test_orbit_examples():
    assert list(orbit(QMat2.of(1, 1, 0, 1), ZERO, 3)) == [Quaternion(float(k), 0, 0, 0) for k in range(4)]
    assert list(orbit(QMat2.diag(2, 1), ONE, 3)) == [Quaternion(float(2 ** k), 0, 0, 0) for k in range(4)]
    rot = orbit(QMat2.diag(exp_i(math.pi / 2), 1), ONE, 4)
    for got, want in zip(rot, [ONE, I, -ONE, -I, ONE]):
        assert qclose(got, want, 1e-15)
    assert rot.pole_pass is None


def test_orbit_records_pole_pass():
    orb = orbit(QMat2.of(0, 1, 1, 0), ZERO, 5)
    assert list(orb) == [ZERO, INF]
    assert orb.pole_pass == 1
    with pytest.raises(ValueError):
        orbit(QMat2.identity(), ZERO, 0)


def test_orbit_through_infinity_continues():
    orb = orbit(QMat2.of(0, 1, 1, 0), INF, 2)
    assert list(orb) == [INF, ZERO, INF] and orb.pole_pass == 2


@given(quaternions)
def test_point_json_round_trip(Z):
    assert point_from_json(point_to_json(Z)) == Z
    assert point_from_json(point_to_json(INF)) is INF


def test_point_json_rejects_garbage():
    with pytest.raises(ValueError):
        point_from_json("nowhere")
