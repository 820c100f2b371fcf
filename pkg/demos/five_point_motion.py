"""Quadratic motion through five points.

Picks five via points, builds the closed-form quadratic motion that drives
the moving frame origin through them at t = 0, 1/4, 1/2, 3/4, 1, and shows
the residuals, the Bezier form, and a dense trajectory sweep.  If matplotlib
is available, the trajectory is saved next to this script.
"""

import math
import pathlib
import random

from motionforge import (ViaTask, interpolate_five_points, pose_at,
                         sample_trajectory, verify)

random.seed(7)
points = [tuple(random.uniform(-1, 1) for _ in range(3)) for _ in range(5)]

print("via points (reached at t = k/4):")
for k, p in enumerate(points):
    print(f"  a{k} = ({p[0]:+.3f}, {p[1]:+.3f}, {p[2]:+.3f})")

motion, bezier = interpolate_five_points(points)
print(f"\nmotion degree: {motion.degree}")
print("node-basis weights (quaternions):")
for i in range(3):
    w = motion.primal.coefficient(i)
    print(f"  t^{i} primal coefficient = ({w.w:+.4f}, {w.x:+.4f}, {w.y:+.4f}, {w.z:+.4f})")

report = verify(ViaTask("points5", points=points), motion)
print(f"\nmax origin residual: {report.max_residual:.2e}")
print(f"Study residue:       {report.study_residue:.2e}")

print("\nBezier weights and control points:")
for u, p in zip(bezier.weights, bezier.control_points):
    print(f"  u = ({u.w:+.4f}, {u.x:+.4f}, {u.y:+.4f}, {u.z:+.4f})   "
          f"p = ({p.x:+.4f}, {p.y:+.4f}, {p.z:+.4f})")

ts = [k / 200 for k in range(201)]
samples = sample_trajectory(motion, ts=ts)
length = sum(math.dist(a.origin, b.origin)
             for a, b in zip(samples, samples[1:]))
print(f"\norigin path length over [0, 1]: {length:.4f}")

pose_mid = pose_at(motion, 0.5)
print(f"frame origin at t = 1/2: {tuple(round(v, 6) for v in pose_mid.translation)}")
print(f"third via point:         {tuple(round(v, 6) for v in points[2])}")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig = plt.figure(figsize=(6, 5))
    ax = fig.add_subplot(projection="3d")
    xs, ys, zs = zip(*(s.origin for s in samples))
    ax.plot(xs, ys, zs, lw=1.5)
    px, py, pz = zip(*points)
    ax.scatter(px, py, pz, color="purple", s=40)
    ax.set_title("origin trajectory through five points")
    out = pathlib.Path(__file__).with_name("five_point_motion.png")
    fig.savefig(out, dpi=120)
    print(f"\nsaved plot to {out}")
except ImportError:
    print("\nmatplotlib not available; skipping the plot")
