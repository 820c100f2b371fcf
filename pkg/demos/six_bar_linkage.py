"""From seven points to spatial six-bar linkages.

A cubic motion has up to six factorizations into three revolute factors;
any two of them close a 1-DoF 6R loop whose tool frame passes all seven
prescribed points.
"""

import math
import random

from motionforge import (all_factorizations, axis_of, build_mechanism,
                         interpolate_seven_points, monic_normalize,
                         project_origin)

random.seed(99)
points = [tuple(random.uniform(-1, 1) for _ in range(3)) for _ in range(7)]

motion, _ = interpolate_seven_points(points)
print("tool-frame origin passes the seven points:")
for k, p in enumerate(points):
    origin = project_origin(motion.evaluate(k / 6))
    print(f"  t = {k}/6: residual {math.dist(origin, p):.1e}")

monic = monic_normalize(motion)
factorizations = all_factorizations(monic.motion, minimum=2)
print(f"\n{len(factorizations)} factorizations of the cubic motion")

mechanism = build_mechanism(factorizations[0], factorizations[1])
print(f"six-bar loop from factorizations 0 and 1 "
      f"({mechanism.joint_count} revolute joints):")
for j, axis in enumerate(mechanism.loop_joints):
    side = "chain A" if j < 3 else "chain B"
    p = axis.point()
    print(f"  joint {j} ({side}): through ({p[0]:+.4f}, {p[1]:+.4f}, {p[2]:+.4f}) "
          f"along ({axis.direction[0]:+.4f}, {axis.direction[1]:+.4f}, "
          f"{axis.direction[2]:+.4f})")

pairs = len(factorizations) * (len(factorizations) - 1) // 2
print(f"\n{pairs} distinct loop candidates in total "
      "(every unordered pair of factorizations)")
