import math

import numpy as np
import pytest

from motionforge import (INF, DualQuaternion, MotionPolynomial, Quaternion,
                         QuaternionPolynomial, ViaTask, interpolate_five_points,
                         interpolate_seven_points, pose_at, sample_trajectory,
                         verify)
from motionforge.errors import SingularParameter

from conftest import rand_motion, rand_vector


def test_pose_at_identity_motion():
    motion = MotionPolynomial.constant(DualQuaternion.identity())
    for t in (-1.0, 0.0, 0.5, 3.0, INF):
        pose = pose_at(motion, t)
        assert np.allclose(pose.rotation, np.eye(3))
        assert np.allclose(pose.translation, 0.0)


def test_pose_at_translation_family():
    # primal 1, dual t*(x i): translation grows linearly along x
    motion = MotionPolynomial(
        QuaternionPolynomial([Quaternion.identity()]),
        QuaternionPolynomial([Quaternion.zero(), Quaternion(0, 1, 0, 0)]))
    for t in (0.0, 0.5, 2.0):
        pose = pose_at(motion, t)
        assert np.allclose(pose.rotation, np.eye(3))
        assert np.allclose(pose.translation, [t, 0.0, 0.0])


def test_pose_at_infinity_is_leading_pose(rng):
    motion = rand_motion(rng, 2)
    lead = motion.evaluate(INF)
    pose = pose_at(motion, INF)
    expected = (lead.dual * lead.primal.inverse()).vector()
    assert np.allclose(pose.translation, expected)


def test_pose_rotations_orthonormal(rng):
    motion = rand_motion(rng, 3)
    for k in range(20):
        t = -1.0 + 3.0 * k / 19
        r = pose_at(motion, t).rotation
        assert np.max(np.abs(r @ r.T - np.eye(3))) < 1e-10
        assert abs(np.linalg.det(r) - 1.0) < 1e-10


def test_rigidity_of_sampled_poses(rng):
    motion = rand_motion(rng, 2)
    x, y = rand_vector(rng), rand_vector(rng)
    base = math.dist(x, y)
    for k in range(20):
        t = -0.5 + 2.0 * k / 19
        pose = pose_at(motion, t)
        moved = math.dist(pose.apply(x), pose.apply(y))
        assert abs(moved - base) < 1e-9 * max(base, 1.0)


def test_singular_parameter_detected():
    # primal vanishes at t = 0
    motion = MotionPolynomial(
        QuaternionPolynomial([Quaternion.zero(), Quaternion.identity()]),
        QuaternionPolynomial([Quaternion(0, 1, 0, 0)]))
    with pytest.raises(SingularParameter):
        pose_at(motion, 0.0)
    with pytest.raises(SingularParameter):
        sample_trajectory(motion, ts=[1.0, 0.0])


def test_sample_trajectory_empty():
    motion = MotionPolynomial.constant(DualQuaternion.identity())
    assert sample_trajectory(motion, ts=[]) == []


def test_sample_trajectory_hits_via_points(rng):
    points = [rand_vector(rng) for _ in range(7)]
    motion, _ = interpolate_seven_points(points)
    samples = sample_trajectory(motion, ts=[k / 6 for k in range(7)])
    for sample, point in zip(samples, points):
        assert math.dist(sample.origin, point) < 1e-9
        assert sample.origin == tuple(sample.pose.translation)


def test_sample_trajectory_point_image(rng):
    motion = rand_motion(rng, 2)
    probe = (0.2, -0.4, 0.9)
    samples = sample_trajectory(motion, point=probe, ts=[0.1, 0.7])
    for s in samples:
        assert s.point_image is not None
        assert math.dist(s.point_image, s.pose.apply(probe)) < 1e-12


def test_dense_sweep_is_continuous(rng):
    points = [rand_vector(rng) for _ in range(5)]
    motion, _ = interpolate_five_points(points)
    ts = [k / 999 for k in range(1000)]
    samples = sample_trajectory(motion, ts=ts)
    origins = [np.array(s.origin) for s in samples]

    # Lipschitz bound from coefficient norms: origin = q p* / (p p*), so
    # |d origin/dt| <= (|q'||p| + |q||p'|)/m + 2 |q||p|^2 |p'| / m^2 with
    # m = min |p(t)|^2 over the grid.
    def poly_bounds(poly):
        total = sum(math.sqrt(c.norm()) for c in poly.coefficients)
        deriv = sum(i * math.sqrt(c.norm())
                    for i, c in enumerate(poly.coefficients))
        return total, deriv

    bp, bpd = poly_bounds(motion.primal)
    bq, bqd = poly_bounds(motion.dual)
    m = min(motion.primal.evaluate(t).norm() for t in ts)
    bound = (bqd * bp + bq * bpd) / m + 2 * bq * bp * bp * bpd / (m * m)
    step = 1.0 / 999
    worst = max(np.linalg.norm(origins[i + 1] - origins[i])
                for i in range(len(origins) - 1))
    assert worst <= bound * step * 1.01


def test_verify_is_quiet_on_mismatch(rng):
    points = [rand_vector(rng) for _ in range(5)]
    task = ViaTask("points5", points=points)
    identity = MotionPolynomial.constant(DualQuaternion.identity())
    report = verify(task, identity)
    assert len(report.residuals) == 5
    assert report.max_residual > 0.1
    assert not report.ok()


def test_verify_detects_perturbation(rng):
    points = [rand_vector(rng) for _ in range(5)]
    motion, _ = interpolate_five_points(points)
    bumped = MotionPolynomial(
        motion.primal,
        motion.dual + QuaternionPolynomial([Quaternion(1e-3, 0, 0, 0)]))
    report = verify(ViaTask("points5", points=points), bumped)
    assert report.study_residue > 1e-6
