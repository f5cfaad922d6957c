"""
Watching points move on the boundary sphere
===========================================

Z -> (aZ + b)(cZ + d)^-1 on H u {oo}: orbits, fixed points, and building
maps out of inversions and reflections.
"""

import math

from quatmoeb import INF, Inversion, QMat2, Quaternion, Reflection, apply, compose_inversions, fixed_points, orbit
from quatmoeb.quat import exp_i

one = Quaternion(1, 0, 0, 0)

# parabolic: one fixed point at infinity, orbits march off to it
print("translation:", [p.w for p in orbit(QMat2.of(1, 1, 0, 1), Quaternion(0, 0, 0, 0), 4)])
print("  fixed:", fixed_points(QMat2.of(1, 1, 0, 1)))

# hyperbolic: repelling 0, attracting infinity
print("stretch:", [p.w for p in orbit(QMat2.diag(2, 1), one, 4)])
print("  fixed:", fixed_points(QMat2.diag(2, 1)))

# elliptic: a rotation, period 4
rot = orbit(QMat2.diag(exp_i(math.pi / 2), 1), one, 4)
print("quarter turn:", [(round(p.w, 12), round(p.x, 12)) for p in rot])

# Z -> Z^-1 swaps 0 and infinity; the orbit of 0 hits the pole at once
swap = QMat2.of(0, 1, 1, 0)
o = orbit(swap, Quaternion(0, 0, 0, 0), 3)
print("swap from 0:", list(o), "pole at step", o.pole_pass)
print("swap fixes", fixed_points(swap))

# Two inversions about the same centre compose to a dilation.
M = compose_inversions(Inversion(Quaternion(0, 0, 0, 0), 1.0), Inversion(Quaternion(0, 0, 0, 0), math.sqrt(2)))
print("inversion pair:", M)
Z = Quaternion(0.3, -1, 2, 0.5)
print("  acts as Z -> 2Z:", apply(M, Z), "vs", Z * 2.0)

# Two parallel reflections compose to a translation.
b = Quaternion(0, 1, 1, 0)
u = b * (1 / b.norm())
T = compose_inversions(Reflection(u), Reflection(u, b * 0.5))
print("reflection pair:", T)
print("  image of infinity:", apply(T, INF))
