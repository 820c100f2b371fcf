import math
import random

import pytest

from motionforge import (ViaTask, interpolate_five_points,
                         interpolate_points_generic, interpolate_seven_points,
                         lagrange_basis, project_origin, study_residue, verify)
from motionforge.errors import (DuplicateNodes, SingularDifference,
                                SingularSystem)

from conftest import rand_vector


def origin_at(motion, t):
    return project_origin(motion.evaluate(t))


def residuals(motion, points, times):
    return [math.dist(origin_at(motion, t), p) for p, t in zip(points, times)]


# --------------------------------------------------------------------------
# node polynomials
# --------------------------------------------------------------------------

def test_node_polynomial_values_quadratic():
    f = lagrange_basis([0.0, 0.5, 1.0])
    # direct product: f0(0) = (0 - 1/2)(0 - 1) = 1/2
    assert f[0].evaluate(0.0).coords() == (0.5, 0.0, 0.0, 0.0)
    assert f[0].evaluate(0.5).coords() == (0.0, 0.0, 0.0, 0.0)


def test_node_polynomial_values_cubic():
    f = lagrange_basis([0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0])
    # f0(0) = (-1/3)(-2/3)(-1) = -2/9
    assert abs(f[0].evaluate(0.0).w - (-2.0 / 9.0)) < 1e-15
    for i in range(4):
        for k in range(4):
            value = f[i].evaluate([0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0][k]).w
            if k == i:
                assert value != 0.0
            else:
                assert abs(value) < 1e-15


def test_duplicate_nodes_rejected():
    with pytest.raises(DuplicateNodes):
        lagrange_basis([0.0, 0.5, 0.5])


# --------------------------------------------------------------------------
# five points
# --------------------------------------------------------------------------

def test_five_points_residuals_and_bezier_endpoints(rng):
    times = [k / 4 for k in range(5)]
    for _ in range(25):
        points = [rand_vector(rng) for _ in range(5)]
        motion, bezier = interpolate_five_points(points)
        res = residuals(motion, points, times)
        assert max(res) < 1e-9
        assert study_residue(motion) < 1e-9
        assert bezier.control_points[0].vector() == points[0]
        assert bezier.control_points[0].w == 0.0
        assert bezier.control_points[2].vector() == points[4]


def test_five_points_repeated_point_raises():
    p = (0.1, 0.2, 0.3)
    with pytest.raises(SingularDifference):
        interpolate_five_points([p, p, (1, 0, 0), (0, 1, 0), (0, 0, 1)])


def test_five_points_matches_generic_solver(rng):
    for _ in range(25):
        points = [rand_vector(rng) for _ in range(5)]
        closed, _ = interpolate_five_points(points)
        generic = interpolate_points_generic(points)
        worst = 0.0
        for i in range(3):
            dp = closed.primal.coefficient(i) - generic.primal.coefficient(i)
            dd = closed.dual.coefficient(i) - generic.dual.coefficient(i)
            worst = max(worst, dp.max_abs(), dd.max_abs())
        assert worst < 1e-10


def test_five_points_generic_agreement_at_scale():
    # the closed form and the realified solver stay within 1e-8 of each
    # other across 1000 random tasks
    rng = random.Random(77)
    worst = 0.0
    for _ in range(1000):
        points = [rand_vector(rng) for _ in range(5)]
        closed, _ = interpolate_five_points(points)
        generic = interpolate_points_generic(points)
        for i in range(3):
            dp = closed.primal.coefficient(i) - generic.primal.coefficient(i)
            dd = closed.dual.coefficient(i) - generic.dual.coefficient(i)
            worst = max(worst, dp.max_abs(), dd.max_abs())
    assert worst < 1e-8


def test_five_points_via_order_matters(rng):
    # point k is met at t = k/4: check an asymmetric configuration
    points = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0), (0, 1, 1)]
    motion, _ = interpolate_five_points(points)
    assert math.dist(origin_at(motion, 0.25), points[1]) < 1e-9
    assert math.dist(origin_at(motion, 0.75), points[3]) < 1e-9


# --------------------------------------------------------------------------
# seven points
# --------------------------------------------------------------------------

def test_seven_points_residuals(rng):
    times = [k / 6 for k in range(7)]
    for _ in range(25):
        points = [rand_vector(rng) for _ in range(7)]
        motion, bezier = interpolate_seven_points(points)
        res = residuals(motion, points, times)
        assert max(res) < 1e-9
        assert study_residue(motion) < 1e-9
        assert bezier.control_points[0].vector() == points[0]
        assert bezier.control_points[3].vector() == points[6]


def test_seven_points_adjacent_repeat_raises():
    pts = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 0),
           (0, 1, 1), (0, 0, 1), (1, 0, 1)]
    with pytest.raises(SingularDifference):
        interpolate_seven_points(pts)


def test_seven_points_matches_generic_solver(rng):
    for _ in range(25):
        points = [rand_vector(rng) for _ in range(7)]
        closed, _ = interpolate_seven_points(points)
        generic = interpolate_points_generic(points)
        worst = 0.0
        for i in range(4):
            dp = closed.primal.coefficient(i) - generic.primal.coefficient(i)
            dd = closed.dual.coefficient(i) - generic.dual.coefficient(i)
            worst = max(worst, dp.max_abs(), dd.max_abs())
        assert worst < 1e-9


# --------------------------------------------------------------------------
# generic scheme
# --------------------------------------------------------------------------

def test_generic_identical_points_rejected():
    with pytest.raises(SingularSystem):
        interpolate_points_generic([(1.0, 1.0, 1.0)] * 5)


def test_generic_three_points(rng):
    # n = 1: a linear motion (single rotation) through three points
    points = [rand_vector(rng) for _ in range(3)]
    motion = interpolate_points_generic(points)
    assert motion.degree == 1
    for p, t in zip(points, (0.0, 0.5, 1.0)):
        assert math.dist(origin_at(motion, t), p) < 1e-9


def test_generic_seven_random_residuals(rng):
    for _ in range(10):
        points = [rand_vector(rng) for _ in range(7)]
        motion = interpolate_points_generic(points)
        for k, p in enumerate(points):
            assert math.dist(origin_at(motion, k / 6), p) < 1e-9


def test_generic_custom_nodes(rng):
    points = [rand_vector(rng) for _ in range(5)]
    motion = interpolate_points_generic(points, via_times=(0.0, 1.0, 2.0),
                                        secondary_times=(0.5, 1.5))
    schedule = [0.0, 0.5, 1.0, 1.5, 2.0]
    for p, t in zip(points, schedule):
        assert math.dist(origin_at(motion, t), p) < 1e-9


# --------------------------------------------------------------------------
# shared properties
# --------------------------------------------------------------------------

def test_scaling_points_scales_trajectory(rng):
    points = [rand_vector(rng) for _ in range(5)]
    scale = 3.5
    scaled = [tuple(scale * c for c in p) for p in points]
    m1, _ = interpolate_five_points(points)
    m2, _ = interpolate_five_points(scaled)
    for t in (0.1, 0.33, 0.62, 0.95):
        a = origin_at(m1, t)
        b = origin_at(m2, t)
        assert max(abs(scale * u - v) for u, v in zip(a, b)) < 1e-9 * scale


def test_verify_reports_schedule(rng):
    points = [rand_vector(rng) for _ in range(7)]
    motion, _ = interpolate_seven_points(points)
    report = verify(ViaTask("points7", points=points), motion)
    assert len(report.residuals) == 7
    assert report.max_residual < 1e-9
    assert report.study_residue < 1e-9
    assert report.ok()
