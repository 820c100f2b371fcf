import math
from fractions import Fraction

import pytest

from motionforge import (Quaternion, interpolate_five_points,
                         interpolate_seven_points, projective_distance,
                         study_value, to_bezier)
from motionforge.errors import UnsupportedDegree
from motionforge.interpolation import (F_TO_BERNSTEIN_CUBIC,
                                       F_TO_BERNSTEIN_QUADRATIC)

from conftest import rand_vector


def exact_node_polynomial(nodes, i, t):
    """f_i(t) = prod_{k != i} (t - t_k) in exact rational arithmetic."""
    value = Fraction(1)
    for k, tk in enumerate(nodes):
        if k != i:
            value *= t - tk
    return value


def exact_bernstein(degree, j, t):
    return math.comb(degree, j) * (1 - t) ** (degree - j) * t ** j


QUAD_NODES = [Fraction(0), Fraction(1, 2), Fraction(1)]
CUBIC_NODES = [Fraction(0), Fraction(1, 3), Fraction(2, 3), Fraction(1)]

# 20 rational probe parameters spread over and beyond the unit interval
PROBES = [Fraction(k, 13) for k in range(-3, 14)] + [Fraction(7, 5), Fraction(-1, 2), Fraction(12, 7)]


@pytest.mark.parametrize("nodes,table", [
    (QUAD_NODES, F_TO_BERNSTEIN_QUADRATIC),
    (CUBIC_NODES, F_TO_BERNSTEIN_CUBIC),
])
def test_basis_conversion_exact(nodes, table):
    """The change of basis from node products to Bernstein polynomials is an
    exact rational identity: zero error in exact arithmetic."""
    degree = len(nodes) - 1
    assert len(PROBES) >= 20
    for i in range(degree + 1):
        for t in PROBES:
            direct = exact_node_polynomial(nodes, i, t)
            via_bernstein = sum(
                table[i][j] * exact_bernstein(degree, j, t)
                for j in range(degree + 1))
            assert direct == via_bernstein


def test_unit_weight_origin_case():
    ones = [Quaternion.identity()] * 3
    origin = [(0.0, 0.0, 0.0)] * 3
    bezier = to_bezier(ones, origin, degree=2)
    us = [u.coords() for u in bezier.weights]
    assert us[0] == (0.5, 0.0, 0.0, 0.0)
    assert us[1] == (-1.0, 0.0, 0.0, 0.0)
    assert us[2] == (0.5, 0.0, 0.0, 0.0)
    for p in bezier.control_points:
        assert p.coords() == (0.0, 0.0, 0.0, 0.0)


def test_bernstein_endpoint_property(rng):
    points = [rand_vector(rng) for _ in range(5)]
    motion, bezier = interpolate_five_points(points)
    # beta_0(0) = 1 and the rest vanish, so the Bezier value at 0 is the
    # first control pair; it must agree with the node-basis evaluation
    v0 = bezier.evaluate(0.0)
    m0 = motion.evaluate(0.0)
    assert projective_distance(v0, m0) < 1e-12


def test_monomial_and_bezier_forms_agree(rng):
    for maker, count in ((interpolate_five_points, 5),
                         (interpolate_seven_points, 7)):
        for _ in range(10):
            points = [rand_vector(rng) for _ in range(count)]
            motion, bezier = maker(points)
            for k in range(10):
                t = -0.3 + 1.7 * k / 9
                diff = bezier.evaluate(t) - motion.evaluate(t)
                assert diff.max_abs() < 1e-11 * max(motion.max_abs(), 1.0)


def test_bezier_to_motion_polynomial_roundtrip(rng):
    points = [rand_vector(rng) for _ in range(7)]
    motion, bezier = interpolate_seven_points(points)
    expanded = bezier.to_motion_polynomial()
    diff = expanded - motion
    assert diff.max_abs() < 1e-12 * max(motion.max_abs(), 1.0)


def test_end_control_dual_quaternions_on_quadric(rng):
    points = [rand_vector(rng) for _ in range(5)]
    _, bezier = interpolate_five_points(points)
    controls = bezier.control_dual_quaternions()
    # endpoint control points are the outer via points, hence on the quadric
    assert abs(study_value(controls[0])) < 1e-12
    assert abs(study_value(controls[-1])) < 1e-12


def test_unsupported_degree():
    with pytest.raises(UnsupportedDegree):
        to_bezier([Quaternion.identity()] * 5, [(0, 0, 0)] * 5, degree=4)
