"""
Normal forms, conjugators and z-classes
=======================================

Hide a simple matrix behind a random change of basis, then recover it.
"""

import math

import numpy as np

from quatmoeb import QMat2, Quaternion, normal_form, zclass_of
from quatmoeb.quat import exp_i
from quatmoeb.zclass import ZClassType, centralizer_element, in_centralizer, representative

rng = np.random.default_rng(42)


def random_qmat():
    return QMat2(*(Quaternion(*rng.uniform(-2, 2, 4)) for _ in range(4)))


hidden = QMat2.of(exp_i(2 * math.pi / 3, 1.5), 1, 0, exp_i(2 * math.pi / 3, 1.5))
S0 = random_qmat()
A = S0 @ hidden @ S0.inverse()
print("disguised matrix:\n ", A)

nf = normal_form(A)
print("kind:", nf.kind)
print("canonical:", nf.canonical)
print("|S A S^-1 - canonical| =", f"{nf.residual:.2e}")

# Diagonal entries of the canonical form are complex numbers in the upper
# half plane; two conjugate-paired eigenvalues in C become one similarity
# class of quaternions.
for name, M in [("diag(i, j)", QMat2.diag(Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0))),
                ("diag(-i, 2)", QMat2.diag(Quaternion(0, -1, 0, 0), 2))]:
    print(name, "->", normal_form(M).canonical)

# The centralizer shape only depends on the canonical form.  Seven shapes occur.
for zc in ZClassType:
    print(f"{zc.value:22s} representative {representative(zc)}")

zc = zclass_of(A)
B = centralizer_element(A, seed=1)
print("z-class of the disguised matrix:", zc)
print("a random element of its centralizer commutes:", in_centralizer(A, B, 1e-9))
