"""
A tour of the eight dynamical types
===================================

Every invertible 2x2 quaternionic matrix acts on the boundary sphere of
hyperbolic 5-space.  Three numbers built from the characteristic polynomial
of its 4x4 complex embedding decide what kind of motion it is.
"""

import math

import numpy as np

from quatmoeb import QMat2, Quaternion, classify, eigen_structure_oracle
from quatmoeb.quat import exp_i

lam = exp_i(math.pi / 3)

# one representative per type
examples = {
    "identity": QMat2.identity(),
    "translation": QMat2.of(1, 1, 0, 1),
    "stretch": QMat2.diag(2, 1),
    "two-rotatory hyperbolic": QMat2.diag(Quaternion(0, 2, 0, 0), 1),
    "two-rotatory elliptic": QMat2.diag(exp_i(math.pi / 2), lam),
    "one-rotatory hyperbolic": QMat2.diag(exp_i(math.pi / 3, 2), lam),
    "one-rotatory elliptic": QMat2.diag(lam, lam),
    "one-rotatory parabolic": QMat2.of(lam, 1, 0, lam),
}

print(f"{'matrix':26s} {'c1':>8s} {'c2':>8s} {'c3':>8s}  type")
for name, A in examples.items():
    r = classify(A)
    c1, c2, c3 = r.invariants.as_tuple()
    print(f"{name:26s} {c1:8.4f} {c2:8.4f} {c3:8.4f}  {r.dtype}")

# The last two rows share c1, c2 and c3.  What separates them is whether
# x^2 - 2 cos(t) x + 1 already kills the embedded matrix.
for name in ("one-rotatory elliptic", "one-rotatory parabolic"):
    print(name, "quadratic residual", f"{classify(examples[name]).minpoly_residual:.2e}")

# The invariants do not see conjugation or real rescaling
rng = np.random.default_rng(0)
S = QMat2(*(Quaternion(*rng.uniform(-2, 2, 4)) for _ in range(4)))
A = examples["one-rotatory parabolic"]
B = 3.7 * (S @ A @ S.inverse())
print("conjugated and rescaled:", classify(B).dtype, [round(c, 10) for c in classify(B).invariants.as_tuple()])

# diag(2, -1) has c1 == c3, the pattern of the elliptic and 1-rotatory cases,
# but its eigenvalues have different moduli.  The signed square roots of c1
# and c3 disagree, which is what puts it in the hyperbolic branch.
D = QMat2.diag(2, -1)
r = classify(D)
print("diag(2,-1):", r.invariants.as_tuple(), "signed gap", r.margins["signed_gap"], "->", r.dtype)
print("eigenvalue oracle agrees:", eigen_structure_oracle(D))
