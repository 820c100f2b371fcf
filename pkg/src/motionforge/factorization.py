"""Factorization of motion polynomials into revolute factors and loop assembly.

A monic motion polynomial of degree d with a root-free real norm polynomial
generically splits as C = (t - h_1) ... (t - h_d) where every h_i is a
rotation (its factor has a fixed line, the joint axis).  Different orderings
of the quadratic factors of the norm polynomial give different decompositions
of the same motion; gluing two of them head-to-tail produces a closed 4R or
6R linkage that performs the motion with one degree of freedom.

The procedure per factor: reduce C modulo a quadratic factor M of C C*; the
remainder is linear, r1 t + r0, and its root h = -r1^-1 r0 also satisfies M,
so (t - h) divides C on the right.  Repeating over the quadratic factors in
the requested order peels off all linear factors.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .dualquat import DualQuaternion, act_on_point
from .errors import (IdenticalFactorizations, InsufficientFactorizations,
                     IrreducibleLeading, NoAxis, NonGenericMotion,
                     RealNormRoots, SingularQuaternion)
from .polynomial import MotionPolynomial, QuaternionPolynomial, norm_polynomial
from .quaternion import Quaternion
from .tolerances import TAU_FACT, TAU_SING


class LinearFactor:
    """A linear right factor t - h representing one revolute joint."""

    __slots__ = ("h",)

    def __init__(self, h):
        self.h = h

    def polynomial(self):
        return MotionPolynomial.t_minus(self.h)

    def __repr__(self):
        return f"LinearFactor({self.h!r})"


class Factorization:
    """Ordered linear factors whose product reconstructs a monic motion."""

    __slots__ = ("factors", "scalar_cofactor", "order", "motion")

    def __init__(self, factors, scalar_cofactor, order, motion):
        self.factors = tuple(factors)
        self.scalar_cofactor = tuple(scalar_cofactor)
        self.order = tuple(order)
        self.motion = motion

    def product(self):
        """Multiply the factors (and real cofactor) back together."""
        out = MotionPolynomial.from_dual_quaternions([DualQuaternion.identity()])
        for f in self.factors:
            out = out * f.polynomial()
        if self.scalar_cofactor != (1.0,):
            cof = QuaternionPolynomial.from_real(self.scalar_cofactor)
            out = MotionPolynomial(out.primal * cof, out.dual * cof)
        return out

    def reconstruction_error(self):
        """Largest coefficient deviation of the factor product from the motion."""
        diff = self.product() - self.motion
        scale = max(self.motion.max_abs(), 1e-300)
        return diff.max_abs() / scale

    def __repr__(self):
        return f"Factorization(order={self.order}, factors={list(self.factors)!r})"


class JointAxis:
    """Plucker line (unit direction, moment) of a revolute joint."""

    __slots__ = ("direction", "moment")

    def __init__(self, direction, moment):
        self.direction = tuple(direction)
        self.moment = tuple(moment)

    def point(self):
        """The axis point closest to the origin."""
        d, m = self.direction, self.moment
        return (d[1] * m[2] - d[2] * m[1],
                d[2] * m[0] - d[0] * m[2],
                d[0] * m[1] - d[1] * m[0])

    def __repr__(self):
        return f"JointAxis(direction={self.direction}, moment={self.moment})"


class Mechanism:
    """Closed single-loop linkage: two factorizations traversed head-to-tail."""

    __slots__ = ("loop_joints", "driving")

    def __init__(self, loop_joints, driving):
        self.loop_joints = tuple(loop_joints)
        self.driving = driving

    @property
    def joint_count(self):
        return len(self.loop_joints)

    def __repr__(self):
        return f"Mechanism(joints={self.joint_count})"


class MonicResult:
    """Monic motion plus the bookkeeping to map back to the original curve.

    ``motion * right_cofactor`` equals the input (after undoing the parameter
    substitution t -> shift + 1/t when ``shift`` is not None).
    """

    __slots__ = ("motion", "right_cofactor", "shift")

    def __init__(self, motion, right_cofactor, shift=None):
        self.motion = motion
        self.right_cofactor = right_cofactor
        self.shift = shift

    def original_parameter(self, t):
        """Map a parameter of the monic motion to the input's parameter."""
        if self.shift is None:
            return t
        return self.shift + 1.0 / t


def _is_monic(motion, tol=1e-12):
    lead = motion.leading_coefficient()
    diff = lead - DualQuaternion.identity()
    return diff.max_abs() <= tol


def _reverse_shift(motion, shift):
    """Coefficients of s^d * C(shift + 1/s): a Moebius reparameterization."""
    d = motion.degree
    coeffs = motion.coefficients()
    out = [DualQuaternion.zero() for _ in range(d + 1)]
    # c_i (shift*s + 1)^i s^(d-i): binomial expansion in s.
    for i, c in enumerate(coeffs):
        for m in range(i + 1):
            power = d - i + m
            out[power] = out[power] + c * (math.comb(i, m) * shift ** m)
    return MotionPolynomial.from_dual_quaternions(out)


def monic_normalize(motion):
    """Normalize so the leading coefficient is the identity.

    Divides on the right by the leading coefficient when its primal part is
    invertible; otherwise searches the parameter substitutions
    t -> b + 1/t, b in 1..8, for one whose induced leading coefficient
    (the value C(b)) is invertible.  The same curve is traced up to the
    recorded constant right factor and reparameterization.
    """
    if _is_monic(motion):
        return MonicResult(motion, DualQuaternion.identity(), None)
    scale = motion.max_abs()
    lead = motion.leading_coefficient()
    if lead.primal.norm() > TAU_SING * scale ** 2:
        inv = lead.inverse()
        return MonicResult(motion.right_mul(inv), lead, None)
    for b in range(1, 9):
        value = motion.evaluate(float(b))
        if value.primal.norm() > TAU_SING * scale ** 2:
            flipped = _reverse_shift(motion, float(b))
            inv = value.inverse()
            return MonicResult(flipped.right_mul(inv), value, float(b))
    raise IrreducibleLeading(
        "no parameter substitution in the search budget makes the leading "
        "coefficient invertible")


def _norm_quadratics(motion):
    """Quadratic factors (m0, m1) of C C* = prod (t^2 + m1 t + m0).

    Conjugate root pairs come from the companion-matrix eigenvalues of the
    real norm polynomial; repeated quadratics are clustered and averaged,
    which restores full accuracy for double roots.  Raises RealNormRoots
    when the norm polynomial has a real zero (unbounded or improper motion).
    """
    nrm = norm_polynomial(motion)
    reals = [c.w for c in nrm.coefficients]
    scale = max(abs(v) for v in reals)
    roots = np.roots(np.array(reals[::-1]))
    if len(roots) == 0:
        raise NonGenericMotion("constant motion has no factors")
    mag = max(1.0, max(abs(r) for r in roots))
    # a real double root splits by about sqrt(machine eps) under the
    # companion eigenvalue solve, so the realness cutoff sits well above that
    pos = sorted((r for r in roots if r.imag > 1e-7 * mag),
                 key=lambda z: (z.real, z.imag))
    if 2 * len(pos) != len(roots):
        raise RealNormRoots(
            "norm polynomial has real roots; the motion leaves the group "
            "and admits no revolute factorization")
    quads = [((r * r.conjugate()).real, -2.0 * r.real) for r in pos]
    clustered = []
    used = [False] * len(quads)
    for i in range(len(quads)):
        if used[i]:
            continue
        group = [quads[i]]
        used[i] = True
        for j in range(i + 1, len(quads)):
            if used[j]:
                continue
            # triple roots split by about eps^(1/3) ~ 6e-6; the symmetric
            # split cancels to second order in the cluster average
            if (abs(quads[j][0] - quads[i][0]) <= 1e-4 * mag * mag
                    and abs(quads[j][1] - quads[i][1]) <= 1e-4 * mag):
                group.append(quads[j])
                used[j] = True
        m0 = sum(g[0] for g in group) / len(group)
        m1 = sum(g[1] for g in group) / len(group)
        clustered.extend([(m0, m1)] * len(group))
    return clustered


def _mod_quadratic(coeffs, m0, m1):
    """Remainder of a dual-quaternion polynomial modulo t^2 + m1 t + m0."""
    work = list(coeffs)
    for d in range(len(work) - 1, 1, -1):
        lead = work[d]
        work[d] = DualQuaternion.zero()
        work[d - 1] = work[d - 1] - lead * m1
        work[d - 2] = work[d - 2] - lead * m0
    return work[0], work[1]


def _right_divide_linear(coeffs, h):
    """Quotient of C by (t - h) from the right; the remainder is dropped."""
    d = len(coeffs) - 1
    quotient = [DualQuaternion.zero() for _ in range(d)]
    carry = DualQuaternion.zero()
    for i in range(d, 0, -1):
        cur = coeffs[i] + carry * h
        quotient[i - 1] = cur
        carry = cur
    return quotient


def _divide_real_quadratic(coeffs, m0, m1):
    """Exact quotient by the real quadratic t^2 + m1 t + m0."""
    d = len(coeffs) - 1
    quotient = [DualQuaternion.zero() for _ in range(d - 1)]
    work = list(coeffs)
    for i in range(d, 1, -1):
        q = work[i]
        quotient[i - 2] = q
        work[i - 1] = work[i - 1] - q * m1
        work[i - 2] = work[i - 2] - q * m0
    return quotient


def factorize(motion, order=None):
    """Split a monic motion into linear revolute factors, one per degree.

    ``order`` is a permutation of the quadratic factors of the norm
    polynomial; distinct orders generically give distinct factorizations.
    Real quadratic factors of the motion itself (remainder identically
    zero) are moved into the scalar cofactor.
    """
    if not _is_monic(motion, tol=1e-9 * max(motion.max_abs(), 1.0)):
        raise ValueError("factorize needs a monic motion; apply monic_normalize first")
    quads = _norm_quadratics(motion)
    degree = motion.degree
    if len(quads) != degree:
        raise NonGenericMotion(
            f"norm polynomial provides {len(quads)} quadratic factors for "
            f"degree {degree}")
    if order is None:
        order = tuple(range(degree))
    order = tuple(order)
    if sorted(order) != list(range(degree)):
        raise ValueError(f"order must be a permutation of 0..{degree - 1}")

    work = motion.coefficients()
    scale = motion.max_abs()
    factors = []
    cofactor = [1.0]
    for idx in order:
        m0, m1 = quads[idx]
        if len(work) == 1:
            # Degree already exhausted by a real cofactor extraction.
            break
        r0, r1 = _mod_quadratic(work, m0, m1)
        rem_scale = max(r0.max_abs(), r1.max_abs())
        if rem_scale <= 1e-9 * scale:
            # The real quadratic divides the motion itself.
            work = _divide_real_quadratic(work, m0, m1)
            new = [0.0] * (len(cofactor) + 2)
            for i, c in enumerate(cofactor):
                new[i] += c * m0
                new[i + 1] += c * m1
                new[i + 2] += c
            cofactor = new
            continue
        if r1.primal.norm() <= TAU_SING * max(rem_scale, 1.0) ** 2:
            raise NonGenericMotion(
                "remainder has a non-invertible leading part; no factorization "
                "exists for this ordering")
        try:
            h = -(r1.inverse() * r0)
        except SingularQuaternion as exc:
            raise NonGenericMotion(str(exc)) from exc
        work = _right_divide_linear(work, h)
        factors.append(LinearFactor(h))
    factors.reverse()
    result = Factorization(factors, cofactor, order, motion)
    err = result.reconstruction_error()
    if err > TAU_FACT:
        raise NonGenericMotion(
            f"factor product deviates from the motion by {err:.3e}")
    return result


def all_factorizations(motion, minimum=2):
    """Every distinct factorization, in lexicographic order of the ordering.

    Orderings that only permute identical quadratic factors are deduplicated.
    Raises InsufficientFactorizations when fewer than ``minimum`` orderings
    succeed (a closed loop needs two).
    """
    quads = _norm_quadratics(motion)
    degree = motion.degree
    seen = set()
    results = []
    for perm in itertools.permutations(range(degree)):
        key = tuple(quads[i] for i in perm)
        if key in seen:
            continue
        seen.add(key)
        try:
            results.append(factorize(motion, perm))
        except NonGenericMotion:
            continue
    if len(results) < minimum:
        raise InsufficientFactorizations(
            f"only {len(results)} factorization(s) exist; {minimum} required")
    return results


def axis_of(factor):
    """Plucker coordinates of the fixed line of a linear factor.

    The factor t - h rotates about the line with direction v/|v| and moment
    u/(2|v|), where v and u are the primal and dual vector parts of h.  The
    halving matches the single-sided point action used throughout (the dual
    part of a displacement is translation times primal, without the
    conventional 1/2), and is confirmed by the fixed-point oracle.  Any
    residual moment component along the axis (noise from the factor's scalar
    dual part) is removed for a pitch-free revolute reading.
    """
    h = factor.h if isinstance(factor, LinearFactor) else factor
    v = h.primal.vector()
    u = h.dual.vector()
    vnorm = math.sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2])
    if vnorm <= 1e-12 * max(h.max_abs(), 1.0):
        raise NoAxis("factor has no rotation axis (vanishing primal vector part)")
    d = (v[0] / vnorm, v[1] / vnorm, v[2] / vnorm)
    m = [u[0] / (2.0 * vnorm), u[1] / (2.0 * vnorm), u[2] / (2.0 * vnorm)]
    dot = m[0] * d[0] + m[1] * d[1] + m[2] * d[2]
    m = (m[0] - dot * d[0], m[1] - dot * d[1], m[2] - dot * d[2])
    return JointAxis(d, m)


def build_mechanism(first, second):
    """Close two factorizations of one motion into a single-loop linkage.

    The loop lists the axes of the first decomposition in order, then the
    axes of the second in reverse, giving 2*degree revolute joints (a
    Bennett 4R for quadratics, a 6R for cubics).
    """
    if len(first.factors) != len(second.factors):
        raise IdenticalFactorizations("factorizations do not match in length")
    same = all(
        (a.h - b.h).max_abs() <= TAU_FACT * max(a.h.max_abs(), 1.0)
        for a, b in zip(first.factors, second.factors))
    if same:
        raise IdenticalFactorizations(
            "the two factorizations coincide; no closed loop results")
    joints = [axis_of(f) for f in first.factors]
    joints.extend(axis_of(f) for f in reversed(second.factors))
    return Mechanism(joints, first.motion)


def fixed_point_error(factor, axis, parameters=(0.3, 1.7), offsets=(0.0, 1.0)):
    """How far the factor's relative displacement moves points of the axis.

    Evaluates g = (t1 - h)(t2 - h)^-1 and applies it to sample points of the
    reported axis; a correct revolute axis is fixed to rounding error.
    """
    poly = factor.polynomial() if isinstance(factor, LinearFactor) else factor
    g1 = poly.evaluate(parameters[0])
    g2 = poly.evaluate(parameters[1])
    g = g1 * g2.inverse()
    base = axis.point()
    worst = 0.0
    for s in offsets:
        x = (base[0] + s * axis.direction[0],
             base[1] + s * axis.direction[1],
             base[2] + s * axis.direction[2])
        img = act_on_point(g, x)
        worst = max(worst, math.dist(img, x))
    return worst
