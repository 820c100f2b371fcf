"""Shared generators for the test suite.

Everything is seeded: the suite must be deterministic.
"""

import math
import random

import pytest

from motionforge import DualQuaternion, MotionPolynomial, Quaternion


def rand_quaternion(rng, scale=1.0):
    return Quaternion(*(rng.gauss(0.0, scale) for _ in range(4)))


def rand_unit_quaternion(rng):
    q = rand_quaternion(rng)
    return q * (1.0 / math.sqrt(q.norm()))


def rand_vector(rng, scale=1.0):
    return tuple(rng.uniform(-scale, scale) for _ in range(3))


def rand_pose(rng, translation_scale=1.0):
    """Random displacement on the Study quadric (exact by construction)."""
    return DualQuaternion.from_rotation_translation(
        rand_unit_quaternion(rng), rand_vector(rng, translation_scale))


def rand_revolute(rng):
    """Random rotation root h: the factor t - h has a fixed line."""
    sigma = rng.gauss(0.0, 1.0)
    v = [rng.gauss(0.0, 1.0) for _ in range(3)]
    u = [rng.gauss(0.0, 1.0) for _ in range(3)]
    shrink = sum(a * b for a, b in zip(u, v)) / sum(a * a for a in v)
    u = [a - shrink * b for a, b in zip(u, v)]
    return DualQuaternion(Quaternion(sigma, *v), Quaternion(0.0, *u))


def rand_motion(rng, degree):
    """Product of random revolute factors: a bounded motion polynomial."""
    out = MotionPolynomial.t_minus(rand_revolute(rng))
    for _ in range(degree - 1):
        out = out * MotionPolynomial.t_minus(rand_revolute(rng))
    return out


@pytest.fixture
def rng():
    return random.Random(20240811)
