"""From five points to a Bennett 4R linkage.

A quadratic motion generically admits exactly two factorizations into two
revolute factors; traversing one chain forward and the other backward closes
a spatial four-bar loop (the Bennett mechanism) that performs the motion.
"""

import random

from motionforge import (all_factorizations, axis_of, build_mechanism,
                         fixed_point_error, interpolate_five_points,
                         monic_normalize)

random.seed(42)
points = [tuple(random.uniform(-1, 1) for _ in range(3)) for _ in range(5)]

motion, _ = interpolate_five_points(points)
monic = monic_normalize(motion)
print(f"motion degree {monic.motion.degree}; "
      f"leading coefficient normalized to the identity")

factorizations = all_factorizations(monic.motion, minimum=2)
print(f"{len(factorizations)} factorizations found\n")

for idx, f in enumerate(factorizations):
    print(f"factorization {idx} (norm-factor order {f.order}):")
    for j, factor in enumerate(f.factors):
        axis = axis_of(factor)
        err = fixed_point_error(factor, axis)
        d, m = axis.direction, axis.moment
        print(f"  joint {j}: direction ({d[0]:+.4f}, {d[1]:+.4f}, {d[2]:+.4f})  "
              f"moment ({m[0]:+.4f}, {m[1]:+.4f}, {m[2]:+.4f})  "
              f"fixed-line error {err:.1e}")
    print(f"  reconstruction error: {f.reconstruction_error():.2e}")

mechanism = build_mechanism(factorizations[0], factorizations[1])
print(f"\nclosed loop with {mechanism.joint_count} revolute joints "
      "(first chain forward, second chain backward):")
for j, axis in enumerate(mechanism.loop_joints):
    p = axis.point()
    print(f"  axis {j}: through ({p[0]:+.4f}, {p[1]:+.4f}, {p[2]:+.4f}) "
          f"along ({axis.direction[0]:+.4f}, {axis.direction[1]:+.4f}, "
          f"{axis.direction[2]:+.4f})")
