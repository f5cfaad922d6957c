import math

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy.algebras.quaternion import Quaternion as SymQ

from quatmoeb import quat
from quatmoeb.errors import DivisionByZero
from quatmoeb.quat import I, J, K, ONE, ZERO, Quaternion

from conftest import nonzero_quaternions, qclose, quaternions, unit_quaternions


def test_multiplication_table():
    assert I * J == K and J * K == I and K * I == J
    assert J * I == -K and K * J == -I and I * K == -J
    for u in (I, J, K):
        assert u * u == -ONE


def test_product_examples():
    q = Quaternion(2, 3, -1, 0)
    assert q * ONE == q
    assert Quaternion(1, 1, 0, 0) * Quaternion(1, 0, 1, 0) == Quaternion(1, 1, 1, 1)


@given(quaternions, quaternions)
def test_product_matches_sympy(p, q):
    ref = SymQ(*p) * SymQ(*q)
    got = p * q
    assert qclose(got, Quaternion(float(ref.a), float(ref.b), float(ref.c), float(ref.d)), 1e-12)


def test_conj_norm_inverse_examples():
    q = Quaternion(1, 1, 1, 1)
    assert quat.conj(q) == Quaternion(1, -1, -1, -1)
    assert quat.norm(q) == 2.0
    assert quat.inverse(J) == -J
    assert quat.real_part(q) == 1.0
    assert quat.imag_part(q) == Quaternion(0, 1, 1, 1)


def test_inverse_of_zero_raises():
    with pytest.raises(DivisionByZero):
        quat.inverse(ZERO)
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


@given(quaternions, quaternions)
def test_norm_is_multiplicative(p, q):
    assert math.isclose((p * q).norm(), p.norm() * q.norm(), rel_tol=1e-12, abs_tol=1e-300)


@given(quaternions)
def test_q_times_conj_is_real_norm_squared(q):
    prod = q * q.conj()
    assert qclose(prod, ONE * q.norm2(), 1e-12 * max(1.0, q.norm2()))


@given(quaternions, quaternions, quaternions)
def test_associativity(p, q, r):
    left, right = (p * q) * r, p * (q * r)
    assert qclose(left, right, 1e-12 * max(1.0, p.norm() * q.norm() * r.norm()))


@given(nonzero_quaternions)
def test_inverse_is_two_sided(q):
    inv = quat.inverse(q)
    assert qclose(q * inv, ONE, 1e-12) and qclose(inv * q, ONE, 1e-12)


def test_similar_examples():
    assert quat.similar(I, J)
    assert not quat.similar(ONE, -ONE)
    assert quat.similar(Quaternion(1, 2, 0, 0), Quaternion(1, 0, 0, 2))


def test_similarity_witness_for_1_plus_2k():
    # brute force: v with v (1 + 2k) = (1 + 2i) v is a kernel vector of a 4x4 real system
    import numpy as np

    p, q = Quaternion(1, 0, 0, 2), Quaternion(1, 2, 0, 0)
    basis = [ONE, I, J, K]
    cols = [list(e * p - q * e) for e in basis]
    _, sv, vt = np.linalg.svd(np.array(cols).T)
    v = Quaternion(*vt[-1])
    assert sv[-1] < 1e-12 and v.norm() > 0.5
    assert qclose(v * p * quat.inverse(v), q, 1e-12)


@given(nonzero_quaternions)
def test_similar_to_complex_representative(q):
    lam = Quaternion.from_complex(quat.complex_representative(q))
    assert quat.similar(q, lam, 1e-12)
    assert lam.x >= 0.0


@given(quaternions, unit_quaternions)
def test_similar_under_conjugation(q, v):
    assert quat.similar(q, v * q * quat.inverse(v), 1e-10)


def test_complex_representative_examples():
    assert quat.complex_representative(J) == 1j
    assert quat.complex_representative(Quaternion(3, 0, 0, 0)) == 3
    assert quat.complex_representative(Quaternion(1, 1, 1, 1)) == pytest.approx(1 + math.sqrt(3) * 1j)


@pytest.mark.parametrize("q", [I, J, -I, K, -K, Quaternion(0, -1, 1e-9, 0), Quaternion(2, -3, 0.5, 1)])
def test_conjugator_to_complex_examples(q):
    u = quat.conjugator_to_complex(q)
    assert math.isclose(u.norm(), 1.0, rel_tol=1e-12)
    target = Quaternion.from_complex(quat.complex_representative(q))
    assert qclose(u * q * u.conj(), target, 1e-12 * max(1.0, q.norm()))


def test_conjugator_of_upper_complex_is_one():
    assert quat.conjugator_to_complex(I) == ONE
    assert quat.conjugator_to_complex(Quaternion(3, 0, 0, 0)) == ONE


@given(quaternions)
def test_conjugator_to_complex_property(q):
    u = quat.conjugator_to_complex(q)
    image = u * q * u.conj()
    assert abs(image.y) + abs(image.z) <= 1e-12 * max(1.0, q.norm())
    assert image.x >= -1e-12 * max(1.0, q.norm())


@given(quaternions)
def test_split_reassemble_is_exact(q):
    c0, c1 = quat.split(q)
    assert quat.reassemble(c0, c1) == q


@given(quaternions)
def test_split_puts_j_on_the_left(q):
    c0, c1 = quat.split(q)
    rebuilt = Quaternion.from_complex(c0) + J * Quaternion.from_complex(c1)
    assert qclose(rebuilt, q, 1e-15 * max(1.0, q.norm()))


def test_split_example():
    # j (y - z i) = y j + z k, so the second component carries -z
    assert quat.split(Quaternion(1, 2, 3, 4)) == (1 + 2j, 3 - 4j)


@given(quaternions)
def test_json_round_trip(q):
    assert quat.from_json(quat.to_json(q)) == q


@pytest.mark.parametrize("bad", [[1, 2, 3], "1", [1, 2, 3, "x"], [1, 2, 3, True], None, [1, 2, 3, float("nan")]])
def test_json_rejects_malformed(bad):
    with pytest.raises(ValueError):
        quat.from_json(bad)


@given(st.floats(-10, 10), st.floats(0.1, 5))
def test_exp_i(theta, r):
    q = quat.exp_i(theta, r)
    assert math.isclose(q.norm(), r, rel_tol=1e-12)
    assert q.y == 0.0 and q.z == 0.0


@pytest.mark.parametrize("scale", [1e-250, 1e-170, 1e170, 1e250])
def test_inverse_at_extreme_magnitudes(scale):
    q = Quaternion(1, -2, 0.5, 3) * scale
    assert qclose(q * quat.inverse(q), ONE, 1e-14)
