"""Construction of rational motions through poses and points.

Five schemes are provided:

* ``interpolate_three_poses``   -- quadratic motion through 3 poses,
* ``interpolate_four_poses``    -- cubic motion through 4 poses (two ruling
  branches and a free real parameter give 1-parameter families),
* ``interpolate_five_points``   -- quadratic motion whose origin trajectory
  passes 5 points at times k/4 (closed form),
* ``interpolate_seven_points``  -- cubic motion through 7 points at times k/6
  (closed form),
* ``interpolate_points_generic`` -- motion through 2n+1 points via a
  realified quaternion linear system (cross-checks the closed forms).

The point schemes build the motion from an unnormalized Lagrange basis
f_i(t) = prod_{k != i} (t - t_k): the primal part is sum w_i f_i with
quaternion weights w_i, and the dual part carries the via point of each node
as a left factor, so the even-indexed points are interpolated for free and
the weights are solved so the odd-indexed ones are met halfway between nodes.
The Study condition then holds identically because it is a polynomial of
degree 2n vanishing at 2n+1 parameters.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .dualquat import (DualQuaternion, normalize_projective,
                       projective_distance, study_bilinear, study_value)
from .errors import (BadLambda, DegenerateInput, DegenerateSpan,
                     DuplicateNodes, NoRealSolution, NoRulings,
                     NotOnStudyQuadric, SingularDifference,
                     SingularElimination, SingularQuaternion, SingularSystem,
                     SingularWeight, UnsupportedDegree)
from .polynomial import INF, MotionPolynomial, QuaternionPolynomial
from .quaternion import Quaternion
from .tolerances import TAU_SING

FIVE_POINT_NODES = (0.0, 0.5, 1.0)
FIVE_POINT_SECONDARY = (0.25, 0.75)
SEVEN_POINT_NODES = (0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0)
SEVEN_POINT_SECONDARY = (1.0 / 6.0, 0.5, 5.0 / 6.0)

POINT_KINDS = ("points5", "points7", "pointsGeneric")
POSE_KINDS = ("poses3", "poses4")
TASK_KINDS = POINT_KINDS + POSE_KINDS


def default_nodes(n):
    """Primary nodes i/n and midpoints (2j-1)/(2n) for the 2n+1 point scheme."""
    primary = tuple(i / n for i in range(n + 1))
    secondary = tuple((2 * j - 1) / (2 * n) for j in range(1, n + 1))
    return primary, secondary


def via_schedule(nodes, secondary):
    """Interleaved parameter list matching the input point order a_0..a_2n."""
    out = []
    for i, t in enumerate(nodes):
        out.append(t)
        if i < len(secondary):
            out.append(secondary[i])
    return out


class ViaTask:
    """An interpolation request: a scheme kind plus its poses or points.

    ``via_times`` / ``secondary_times`` may be customized only for the
    generic point scheme; the closed-form schemes hard-code their nodes.
    ``lam`` and ``branch`` are the four-pose family controls.
    """

    __slots__ = ("kind", "points", "poses", "via_times", "secondary_times",
                 "lam", "branch")

    def __init__(self, kind, points=None, poses=None, via_times=None,
                 secondary_times=None, lam=None, branch="k1"):
        if kind not in TASK_KINDS:
            raise ValueError(f"unknown task kind {kind!r}")
        self.kind = kind
        self.points = None if points is None else tuple(tuple(float(c) for c in p) for p in points)
        self.poses = None if poses is None else tuple(poses)
        self.via_times = None if via_times is None else tuple(float(t) for t in via_times)
        self.secondary_times = (None if secondary_times is None
                                else tuple(float(t) for t in secondary_times))
        self.lam = None if lam is None else float(lam)
        self.branch = branch
        self._validate()

    def _validate(self):
        if self.kind in POINT_KINDS:
            if self.points is None:
                raise ValueError(f"{self.kind} task needs points")
            count = {"points5": 5, "points7": 7}.get(self.kind)
            if count is not None and len(self.points) != count:
                raise ValueError(f"{self.kind} needs {count} points, got {len(self.points)}")
            if self.kind == "pointsGeneric":
                if len(self.points) < 3 or len(self.points) % 2 == 0:
                    raise ValueError("generic scheme needs an odd number (>= 3) of points")
        else:
            if self.poses is None:
                raise ValueError(f"{self.kind} task needs poses")
            count = {"poses3": 3, "poses4": 4}[self.kind]
            if len(self.poses) != count:
                raise ValueError(f"{self.kind} needs {count} poses, got {len(self.poses)}")
            if self.branch not in ("k1", "k2"):
                raise ValueError(f"branch must be 'k1' or 'k2', got {self.branch!r}")

    def schedule(self):
        """Parameter values paired with the inputs, in input order.

        Point kinds interleave primary and secondary nodes; poses3 uses
        (0, 1, inf); poses4 nodes depend on the branch and are computed by
        ``four_pose_nodes``.
        """
        if self.kind == "points5":
            return via_schedule(FIVE_POINT_NODES, FIVE_POINT_SECONDARY)
        if self.kind == "points7":
            return via_schedule(SEVEN_POINT_NODES, SEVEN_POINT_SECONDARY)
        if self.kind == "pointsGeneric":
            n = (len(self.points) - 1) // 2
            nodes, secondary = default_nodes(n)
            if self.via_times is not None:
                nodes = self.via_times
            if self.secondary_times is not None:
                secondary = self.secondary_times
            return via_schedule(nodes, secondary)
        if self.kind == "poses3":
            return [0.0, 1.0, INF]
        _, _, ts = four_pose_nodes(self.poses, self.branch)
        return [INF] + list(ts)


# --------------------------------------------------------------------------
# Lagrange machinery
# --------------------------------------------------------------------------

def _check_distinct(nodes):
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            if nodes[i] == nodes[j]:
                raise DuplicateNodes(f"nodes {i} and {j} coincide at t={nodes[i]}")


def _poly_from_roots(roots):
    """Monic real polynomial with the given roots, ascending coefficients."""
    coeffs = [1.0]
    for r in roots:
        out = [0.0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            out[i + 1] += c
            out[i] -= r * c
        coeffs = out
    return coeffs


def _node_products(nodes):
    """Coefficient lists of f_i(t) = prod_{k != i}(t - t_k), ascending."""
    return [_poly_from_roots([tk for k, tk in enumerate(nodes) if k != i])
            for i in range(len(nodes))]


def lagrange_basis(nodes):
    """Unnormalized Lagrange node polynomials as quaternion polynomials.

    f_i vanishes at every node except t_i; the f_i are degree len(nodes)-1
    and are not scaled to 1 at their own node.
    """
    nodes = [float(t) for t in nodes]
    _check_distinct(nodes)
    return [QuaternionPolynomial.from_real(c) for c in _node_products(nodes)]


def _motion_from_weights(weights, anchors, nodes):
    """Assemble p = sum w_i f_i and q = sum a_i w_i f_i."""
    fcoeffs = _node_products(list(nodes))
    degree = len(nodes) - 1
    p = [Quaternion.zero() for _ in range(degree + 1)]
    q = [Quaternion.zero() for _ in range(degree + 1)]
    for i, w in enumerate(weights):
        aw = anchors[i] * w
        for d, c in enumerate(fcoeffs[i]):
            if c != 0.0:
                p[d] = p[d] + w * c
                q[d] = q[d] + aw * c
    return MotionPolynomial(QuaternionPolynomial(p), QuaternionPolynomial(q))


# --------------------------------------------------------------------------
# Bezier form
# --------------------------------------------------------------------------

# Exact change of basis from the node polynomials f_i to the Bernstein basis
# for the default nodes; rows are f_i, columns are beta_j.
F_TO_BERNSTEIN_QUADRATIC = (
    (Fraction(1, 2), Fraction(-1, 4), Fraction(0)),
    (Fraction(0), Fraction(-1, 2), Fraction(0)),
    (Fraction(0), Fraction(-1, 4), Fraction(1, 2)),
)
F_TO_BERNSTEIN_CUBIC = (
    (Fraction(-2, 9), Fraction(5, 27), Fraction(-2, 27), Fraction(0)),
    (Fraction(0), Fraction(2, 9), Fraction(-1, 9), Fraction(0)),
    (Fraction(0), Fraction(1, 9), Fraction(-2, 9), Fraction(0)),
    (Fraction(0), Fraction(2, 27), Fraction(-5, 27), Fraction(2, 9)),
)


def _bernstein(degree, j, t):
    return math.comb(degree, j) * (1.0 - t) ** (degree - j) * t ** j


class BezierMotion:
    """Bernstein form of a motion: sum u_j beta_j + eps sum (p_j u_j) beta_j.

    ``weights`` are the quaternion Bezier weights u_j.  ``control_points``
    are quaternions p_j; the first and last are exactly the outer via points
    (imaginary), while interior ones generally carry a nonzero scalar part,
    so only the end control dual quaternions u_j + eps p_j u_j lie on the
    Study quadric.  The expansion reproduces the monomial motion exactly.
    """

    __slots__ = ("weights", "control_points", "degree")

    def __init__(self, weights, control_points):
        self.weights = tuple(weights)
        self.control_points = tuple(control_points)
        self.degree = len(self.weights) - 1
        if len(self.control_points) != len(self.weights):
            raise ValueError("weights and control points must pair up")

    def control_vectors(self):
        """The 3D positions of the control points (vector parts)."""
        return [p.vector() for p in self.control_points]

    def control_dual_quaternions(self):
        """Homogeneous control points u_j + eps p_j u_j."""
        return [DualQuaternion(u, p * u)
                for u, p in zip(self.weights, self.control_points)]

    def evaluate(self, t):
        if t == INF:
            u = self.weights[-1]
            return DualQuaternion(u, self.control_points[-1] * u)
        primal = Quaternion.zero()
        dual = Quaternion.zero()
        for j, (u, p) in enumerate(zip(self.weights, self.control_points)):
            b = _bernstein(self.degree, j, t)
            primal = primal + u * b
            dual = dual + (p * u) * b
        return DualQuaternion(primal, dual)

    def to_motion_polynomial(self):
        """Expand the Bernstein form into monomial coefficients."""
        d = self.degree
        p = [Quaternion.zero() for _ in range(d + 1)]
        q = [Quaternion.zero() for _ in range(d + 1)]
        for j, (u, pc) in enumerate(zip(self.weights, self.control_points)):
            v = pc * u
            base = math.comb(d, j)
            # beta_j = comb(d,j) t^j (1-t)^(d-j): expand the power of (1-t)
            for m in range(d - j + 1):
                c = base * math.comb(d - j, m) * ((-1.0) ** m)
                p[j + m] = p[j + m] + u * c
                q[j + m] = q[j + m] + v * c
        return MotionPolynomial(QuaternionPolynomial(p), QuaternionPolynomial(q))


def to_bezier(weights, anchor_points, degree=None):
    """Convert node-basis weights and via anchors to Bernstein control data.

    ``weights`` are the w_i of the node basis (degree+1 of them) and
    ``anchor_points`` the even-indexed via points that tag the dual part.
    Only degrees 2 and 3 (the default node layouts) are supported.
    """
    if degree is None:
        degree = len(weights) - 1
    if degree == 2:
        table = F_TO_BERNSTEIN_QUADRATIC
    elif degree == 3:
        table = F_TO_BERNSTEIN_CUBIC
    else:
        raise UnsupportedDegree(f"Bezier conversion supports degrees 2 and 3, got {degree}")
    if len(weights) != degree + 1 or len(anchor_points) != degree + 1:
        raise ValueError("need degree+1 weights and anchor points")
    anchors = [Quaternion.from_vector(p) for p in anchor_points]
    us = []
    vs = []
    for j in range(degree + 1):
        u = Quaternion.zero()
        v = Quaternion.zero()
        for i in range(degree + 1):
            c = float(table[i][j])
            if c != 0.0:
                u = u + weights[i] * c
                v = v + (anchors[i] * weights[i]) * c
        us.append(u)
        vs.append(v)
    controls = []
    for j in range(degree + 1):
        if j == 0:
            controls.append(anchors[0])
            continue
        if j == degree:
            controls.append(anchors[-1])
            continue
        try:
            controls.append(vs[j] * us[j].inverse())
        except SingularQuaternion as exc:
            raise SingularWeight(
                f"Bezier weight u_{j} is not invertible: {exc}") from exc
    return BezierMotion(us, controls)


# --------------------------------------------------------------------------
# Point schemes
# --------------------------------------------------------------------------

def _differences(points, pairs):
    """Imaginary-quaternion differences d_ij = a_i - a_j with zero guard."""
    anchors = [Quaternion.from_vector(p) for p in points]
    diffs = {}
    scale = 0.0
    for i, j in pairs:
        d = anchors[i] - anchors[j]
        diffs[(i, j)] = d
        scale = max(scale, d.norm())
    for (i, j), d in diffs.items():
        if d.norm() <= TAU_SING * max(scale, 1.0):
            raise SingularDifference(f"via points {i} and {j} coincide")
    return anchors, diffs


def _guarded_inverse(q, exc_type, what):
    try:
        return q.inverse()
    except SingularQuaternion as exc:
        raise exc_type(f"{what} is not invertible") from exc


def interpolate_five_points(points):
    """Quadratic motion through 5 points at times (0, 1/4, 1/2, 3/4, 1).

    Returns the motion polynomial together with its Bezier form.  The
    input order matters: point k is reached at t = k/4.
    """
    points = [tuple(float(c) for c in p) for p in points]
    if len(points) != 5:
        raise ValueError(f"need exactly 5 points, got {len(points)}")
    a, d = _differences(points, [(1, 0), (2, 1), (2, 3), (3, 0), (4, 1), (4, 3)])

    d41i = _guarded_inverse(d[(4, 1)], SingularDifference, "difference a4-a1")
    d43i = _guarded_inverse(d[(4, 3)], SingularDifference, "difference a4-a3")
    d21i = _guarded_inverse(d[(2, 1)], SingularDifference, "difference a2-a1")
    d23i = _guarded_inverse(d[(2, 3)], SingularDifference, "difference a2-a3")

    f2 = (d41i * d[(2, 1)]) * -9.0 - (d43i * d[(2, 3)]) * 3.0
    g2 = (d41i * d[(1, 0)]) * 9.0 - d43i * d[(3, 0)]
    w2 = _guarded_inverse(f2, SingularWeight, "middle weight factor") * g2

    f4 = -(d21i * d[(4, 1)]) - (d23i * d[(4, 3)]) * 3.0
    g4 = (d21i * d[(1, 0)]) * 3.0 + d23i * d[(3, 0)]
    w4 = _guarded_inverse(f4, SingularWeight, "end weight factor") * g4

    weights = [Quaternion.identity(), w2, w4]
    anchors = [a[0], a[2], a[4]]
    motion = _motion_from_weights(weights, anchors, FIVE_POINT_NODES)
    bezier = to_bezier(weights, [points[0], points[2], points[4]], degree=2)
    return motion, bezier


def interpolate_seven_points(points):
    """Cubic motion through 7 points at times k/6, k = 0..6.

    The three node-basis weights are obtained by noncommutative Gaussian
    elimination on the 3x3 quaternion system coming from the midpoint
    conditions, then back-substitution.  Returns (motion, bezier).
    """
    points = [tuple(float(c) for c in p) for p in points]
    if len(points) != 7:
        raise ValueError(f"need exactly 7 points, got {len(points)}")
    pairs = [(2, 1), (4, 1), (6, 1), (1, 0), (2, 3), (4, 3), (6, 3), (3, 0),
             (2, 5), (4, 5), (6, 5), (5, 0)]
    a, d = _differences(points, pairs)

    # Row scalings clear the denominators of the node products at the three
    # midpoints; the sign of the (2,4) entry follows from direct expansion of
    # the midpoint condition at t = 1/2.
    c = {
        (1, 2): d[(2, 1)] * 15.0, (1, 4): d[(4, 1)] * 5.0,
        (1, 6): d[(6, 1)] * 3.0, (1, 8): d[(1, 0)] * -15.0,
        (2, 2): d[(2, 3)] * 9.0, (2, 4): d[(4, 3)] * -9.0,
        (2, 6): d[(6, 3)] * -3.0, (2, 8): d[(3, 0)] * 3.0,
        (3, 2): d[(2, 5)] * -5.0, (3, 4): d[(4, 5)] * -15.0,
        (3, 6): d[(6, 5)] * 15.0, (3, 8): d[(5, 0)] * -3.0,
    }

    def elim(p1, p2, p3, p4, what):
        left = _guarded_inverse(p1, SingularElimination, what)
        right = _guarded_inverse(p3, SingularElimination, what)
        return left * p2 - right * p4

    e = {}
    for j in (2, 3):
        for i in (4, 6, 8):
            e[(j, i)] = elim(c[(1, 2)], c[(1, i)], c[(j, 2)], c[(j, i)],
                             f"pivot while eliminating w2 (row {j})")

    r44 = elim(e[(2, 6)], e[(2, 4)], e[(3, 6)], e[(3, 4)], "pivot while eliminating w6")
    r48 = elim(e[(2, 6)], e[(2, 8)], e[(3, 6)], e[(3, 8)], "pivot while eliminating w6")
    r66 = elim(e[(2, 4)], e[(2, 6)], e[(3, 4)], e[(3, 6)], "pivot while eliminating w4")
    r68 = elim(e[(2, 4)], e[(2, 8)], e[(3, 4)], e[(3, 8)], "pivot while eliminating w4")

    w4 = _guarded_inverse(r44, SingularElimination, "w4 pivot") * r48
    w6 = _guarded_inverse(r66, SingularElimination, "w6 pivot") * r68
    # Back-substitution needs the left inverse of the w2 row pivot.
    w2 = _guarded_inverse(c[(1, 2)], SingularElimination, "w2 pivot") * (
        c[(1, 8)] - c[(1, 4)] * w4 - c[(1, 6)] * w6)

    weights = [Quaternion.identity(), w2, w4, w6]
    anchors = [a[0], a[2], a[4], a[6]]
    motion = _motion_from_weights(weights, anchors, SEVEN_POINT_NODES)
    bezier = to_bezier(weights, [points[0], points[2], points[4], points[6]], degree=3)
    return motion, bezier


def _left_matrix(q):
    w, x, y, z = q.coords()
    return np.array([
        [w, -x, -y, -z],
        [x, w, -z, y],
        [y, z, w, -x],
        [z, -y, x, w],
    ])


def interpolate_points_generic(points, via_times=None, secondary_times=None):
    """Motion through 2n+1 points by solving the realified weight system.

    Each quaternion unknown becomes 4 reals and each known left factor its
    4x4 left-multiplication block; the 4n x 4n system is solved by SVD with
    a rank guard.  Slower than the closed forms but works for any n >= 1
    and for custom node layouts.
    """
    points = [tuple(float(c) for c in p) for p in points]
    if len(points) < 3 or len(points) % 2 == 0:
        raise ValueError("need an odd number (>= 3) of points")
    n = (len(points) - 1) // 2
    nodes, secondary = default_nodes(n)
    if via_times is not None:
        nodes = tuple(float(t) for t in via_times)
    if secondary_times is not None:
        secondary = tuple(float(t) for t in secondary_times)
    if len(nodes) != n + 1 or len(secondary) != n:
        raise ValueError(f"need {n + 1} via times and {n} secondary times")
    _check_distinct(list(nodes) + list(secondary))

    anchors = [Quaternion.from_vector(p) for p in points]
    fcoeffs = _node_products(list(nodes))

    def feval(i, t):
        return sum(c * t ** k for k, c in enumerate(fcoeffs[i]))

    A = np.zeros((4 * n, 4 * n))
    b = np.zeros(4 * n)
    for j in range(1, n + 1):
        s = secondary[j - 1]
        for i in range(1, n + 1):
            coef = (anchors[2 * i] - anchors[2 * j - 1]) * feval(i, s)
            A[4 * (j - 1):4 * j, 4 * (i - 1):4 * i] = _left_matrix(coef)
        rhs = (anchors[2 * j - 1] - anchors[0]) * feval(0, s)
        b[4 * (j - 1):4 * j] = rhs.coords()

    u, sing, vt = np.linalg.svd(A)
    if sing[-1] <= TAU_SING * sing[0]:
        raise SingularSystem(
            f"weight system is rank deficient (sigma_min/sigma_max = "
            f"{sing[-1] / sing[0] if sing[0] else 0.0:.3e})")
    x = vt.T @ ((u.T @ b) / sing)

    weights = [Quaternion.identity()]
    for i in range(n):
        weights.append(Quaternion(*x[4 * i:4 * i + 4]))
    evens = [anchors[2 * i] for i in range(n + 1)]
    return _motion_from_weights(weights, evens, nodes)


# --------------------------------------------------------------------------
# Pose schemes
# --------------------------------------------------------------------------

def _validated_poses(poses, expected):
    """Projectively normalize, then check quadric membership and primal rank."""
    if len(poses) != expected:
        raise ValueError(f"need exactly {expected} poses, got {len(poses)}")
    out = []
    for idx, c in enumerate(poses):
        try:
            nc = normalize_projective(c)
        except SingularQuaternion as exc:
            raise DegenerateInput(f"pose {idx} is zero") from exc
        if nc.primal.norm() <= 1e-12:
            raise DegenerateInput(f"pose {idx} has a non-invertible primal part")
        if abs(study_value(nc)) > 1e-8:
            raise NotOnStudyQuadric(
                f"pose {idx} violates the Study condition by {study_value(nc):.3e}")
        out.append(nc)
    return out


def interpolate_three_poses(c0, c1, c2):
    """Quadratic motion with C(0), C(1), C(inf) at the three given poses.

    The curve alpha*c0 + (c1 - alpha*c0 - beta*c2) t + beta*c2 t^2 lies on
    the Study quadric exactly when its quadric form (a quartic with zero
    constant and leading coefficients) vanishes; solving the two surviving
    linear forms fixes alpha and beta.
    """
    n0, n1, n2 = _validated_poses([c0, c1, c2], 3)
    for i, j, a, b in ((0, 1, n0, n1), (0, 2, n0, n2), (1, 2, n1, n2)):
        if projective_distance(a, b) <= 1e-9:
            raise DegenerateInput(f"poses {i} and {j} coincide projectively")

    b01 = study_bilinear(n0, n1)
    b02 = study_bilinear(n0, n2)
    b12 = study_bilinear(n1, n2)
    scale = max(abs(b01), abs(b02), abs(b12))
    if scale <= 1e-10:
        raise NoRealSolution(
            "poses lie on a common ruling of the Study quadric; the conic "
            "family degenerates to a line")
    if abs(b02) <= 1e-12 * scale:
        raise NoRealSolution("linear system for the conic coefficients is singular")
    alpha = b12 / b02
    beta = b01 / b02
    if abs(alpha) <= 1e-12 or abs(beta) <= 1e-12:
        raise NoRealSolution("conic coefficient vanishes; no quadratic motion exists")

    coeffs = [n0 * alpha, n1 - n0 * alpha - n2 * beta, n2 * beta]
    peak = max(c.max_abs() for c in coeffs)
    coeffs = [c / peak for c in coeffs]
    return MotionPolynomial.from_dual_quaternions(coeffs)


def four_pose_nodes(poses, branch="k1"):
    """Normalized frame, ruling direction, and nodes for the 4-pose scheme.

    Left-multiplies everything by the conjugate of the first pose so it
    becomes the identity, intersects the vectorial plane of the span with
    the Study quadric to find the two rulings through the identity, and
    reads off the parameter at which the opposite-family ruling through
    each pose meets the chosen line.

    Returns (normalized poses, ruling k, [t1, t2, t3]).
    """
    if branch not in ("k1", "k2"):
        raise ValueError(f"branch must be 'k1' or 'k2', got {branch!r}")
    normd = _validated_poses(poses, 4)
    base = normd[0].conjugate()
    cs = [normalize_projective(base * c) if i else DualQuaternion.identity()
          for i, c in enumerate(normd)]

    M = np.array([c.coords() for c in cs]).T  # 8 x 4
    sing = np.linalg.svd(M, compute_uv=False)
    if sing[3] <= 1e-9 * sing[0]:
        raise DegenerateSpan("poses do not span a 3-space")

    # Vectorial elements: both scalar coordinates vanish.
    cond = M[[0, 4], :]
    _, s2, vt2 = np.linalg.svd(cond)
    rank = int(np.sum(s2 > 1e-10 * max(s2[0], 1.0)))
    if 4 - rank != 2:
        raise DegenerateSpan("vectorial subspace of the span is not 2-dimensional")
    basis = vt2[rank:]
    v1 = DualQuaternion.from_coords(M @ basis[0])
    v2 = DualQuaternion.from_coords(M @ basis[1])
    n1 = math.sqrt(sum(x * x for x in v1.coords()))
    n2 = math.sqrt(sum(x * x for x in v2.coords()))
    v1 = v1 / n1
    v2 = v2 / n2

    qa = study_value(v1)
    qb = study_bilinear(v1, v2)
    qc = study_value(v2)
    disc = qb * qb - qa * qc
    if disc < -1e-12:
        raise NoRulings(
            f"the quadric section carries no real rulings (discriminant {disc:.3e})")
    root = math.sqrt(max(disc, 0.0))

    ks = []
    for sgn in (1.0, -1.0):
        r1 = (-qb + sgn * root, qa)
        r2 = (qc, -qb - sgn * root)
        xy = r1 if math.hypot(*r1) >= math.hypot(*r2) else r2
        k = v1 * xy[0] + v2 * xy[1]
        norm = math.sqrt(sum(x * x for x in k.coords()))
        if norm == 0.0:
            raise NoRulings("degenerate ruling direction")
        ks.append(k / norm)
    k = ks[0] if branch == "k1" else ks[1]

    one = DualQuaternion.identity()
    ts = []
    for i in (1, 2, 3):
        den = study_bilinear(cs[i], one)
        if abs(den) <= 1e-12:
            raise DegenerateInput(
                f"pose {i} sits at the infinite node of the chosen ruling")
        ts.append(study_bilinear(cs[i], k) / den)
    span = 1.0 + max(abs(t) for t in ts)
    for i in range(3):
        for j in range(i + 1, 3):
            if abs(ts[i] - ts[j]) <= 1e-9 * span:
                raise DegenerateInput(
                    f"poses {i + 1} and {j + 1} map to the same node")
    return cs, k, ts


def interpolate_four_poses(poses, branch="k1", lam=None):
    """Cubic motion through 4 poses; one member of a 1-parameter family.

    The first pose is attained at t = inf (as the leading coefficient) and
    the others at nodes determined by the ruling geometry.  ``branch``
    selects one of the two rulings through the first pose and ``lam`` picks
    the member of the family (default: beyond the largest node).
    """
    normd = _validated_poses(poses, 4)
    cs, k, ts = four_pose_nodes(poses, branch)
    t1, t2, t3 = ts
    span = 1.0 + max(abs(t) for t in ts)
    if lam is None:
        lam = 2.0 * max(abs(t) for t in ts) + 1.0
    else:
        lam = float(lam)
        if not math.isfinite(lam):
            raise BadLambda(f"lambda must be finite, got {lam}")
        if min(abs(lam - t) for t in ts) <= 1e-9 * span:
            raise BadLambda(f"lambda {lam} collides with an interpolation node")

    one = DualQuaternion.identity()

    def node_poly(i, t):
        others = [ts[j] for j in range(3) if j != i]
        den = (ts[i] - others[0]) * (ts[i] - others[1])
        return (t - others[0]) * (t - others[1]) / den

    w_lam = (lam - t1) * (lam - t2) * (lam - t3)
    cols = [(cs[0] * w_lam).coords()]
    for i in range(3):
        cols.append((cs[i + 1] * node_poly(i, lam)).coords())
    cols.append((-(one * lam - k)).coords())
    S = np.array(cols).T  # 8 x 5

    _, sing, vt = np.linalg.svd(S)
    if sing[3] <= 1e-9 * sing[0]:
        raise DegenerateInput("cubic through the poses is not unique")
    sol = vt[-1]
    if np.min(np.abs(sol)) <= 1e-9 * np.max(np.abs(sol)):
        raise NoRealSolution("a pose weight vanishes; the cubic misses a pose")

    coeffs = [DualQuaternion.zero() for _ in range(4)]
    wpoly = _poly_from_roots([t1, t2, t3])
    for d, c in enumerate(wpoly):
        coeffs[d] = coeffs[d] + cs[0] * (sol[0] * c)
    for i in range(3):
        others = [ts[j] for j in range(3) if j != i]
        den = (ts[i] - others[0]) * (ts[i] - others[1])
        lpoly = [x / den for x in _poly_from_roots(others)]
        for d, c in enumerate(lpoly):
            coeffs[d] = coeffs[d] + cs[i + 1] * (sol[i + 1] * c)

    # Undo the left normalization; a positive real rescale keeps numbers tame.
    coeffs = [normd[0] * c for c in coeffs]
    peak = max(c.max_abs() for c in coeffs)
    coeffs = [c / peak for c in coeffs]
    return MotionPolynomial.from_dual_quaternions(coeffs)
