"""Cubic motion through seven points, with the generic solver as a witness.

The closed-form elimination and the realified linear system are two
independent routes to the same weights; this script runs both and compares.
"""

import math
import random

from motionforge import (interpolate_points_generic, interpolate_seven_points,
                         project_origin, study_residue)

random.seed(11)
points = [tuple(random.uniform(-1, 1) for _ in range(3)) for _ in range(7)]

print("seven via points, reached at t = k/6:")
for k, p in enumerate(points):
    print(f"  a{k} = ({p[0]:+.3f}, {p[1]:+.3f}, {p[2]:+.3f})")

closed, bezier = interpolate_seven_points(points)
generic = interpolate_points_generic(points)

print(f"\nclosed-form motion degree: {closed.degree}")
print(f"Study residue: {study_residue(closed):.2e}")

print("\nresiduals at the via times:")
for k, p in enumerate(points):
    origin = project_origin(closed.evaluate(k / 6))
    print(f"  t = {k}/6: |origin - a{k}| = {math.dist(origin, p):.2e}")

gap = 0.0
for i in range(4):
    dp = closed.primal.coefficient(i) - generic.primal.coefficient(i)
    dd = closed.dual.coefficient(i) - generic.dual.coefficient(i)
    gap = max(gap, dp.max_abs(), dd.max_abs())
print(f"\nclosed form vs realified linear solver: max coefficient gap {gap:.2e}")

print("\ncubic Bezier form (weights and control quaternions):")
for j, (u, p) in enumerate(zip(bezier.weights, bezier.control_points)):
    print(f"  u{j} = ({u.w:+.4f}, {u.x:+.4f}, {u.y:+.4f}, {u.z:+.4f})   "
          f"p{j} = ({p.w:+.4f}; {p.x:+.4f}, {p.y:+.4f}, {p.z:+.4f})")
print("(the first and last control points are exactly a0 and a6;")
print(" interior ones carry a scalar component)")
