"""Polynomials with quaternion and dual-quaternion coefficients.

Coefficients are stored in ascending degree.  The indeterminate t is real and
therefore central, so evaluation by Horner's scheme and multiplication by
convolution are valid despite the noncommutative coefficients.  Evaluation at
t = infinity follows the projective convention and returns the leading
coefficient.

A MotionPolynomial C = p(t) + eps*q(t) parameterizes a rational rigid-body
motion when its norm polynomial C C* is a nonzero real polynomial; the dual
part of C C* is exactly the Study condition p q* + q p*, so `study_residue`
measures how far a curve is from being a motion.
"""

from __future__ import annotations

import math

from .dualquat import DualQuaternion
from .quaternion import Quaternion

INF = math.inf


def _trim(coeffs, zero):
    out = list(coeffs)
    while len(out) > 1 and out[-1].is_zero():
        out.pop()
    if not out:
        out = [zero]
    return tuple(out)


class QuaternionPolynomial:
    """Polynomial with quaternion coefficients, ascending degree."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        self.coefficients = _trim(coefficients, Quaternion.zero())

    @classmethod
    def from_real(cls, reals):
        return cls([Quaternion(r) for r in reals])

    @classmethod
    def constant(cls, q):
        return cls([q])

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def is_zero(self):
        return all(c.is_zero() for c in self.coefficients)

    def coefficient(self, i):
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return Quaternion.zero()

    def evaluate(self, t):
        """Horner evaluation; t = inf returns the leading coefficient."""
        if t == INF:
            return self.coefficients[-1]
        acc = Quaternion.zero()
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def conjugate(self):
        return QuaternionPolynomial([c.conjugate() for c in self.coefficients])

    def max_abs(self):
        return max(c.max_abs() for c in self.coefficients)

    def __mul__(self, other):
        if isinstance(other, QuaternionPolynomial):
            out = [Quaternion.zero() for _ in range(self.degree + other.degree + 1)]
            for i, a in enumerate(self.coefficients):
                if a.is_zero():
                    continue
                for j, b in enumerate(other.coefficients):
                    out[i + j] = out[i + j] + a * b
            return QuaternionPolynomial(out)
        if isinstance(other, (int, float)):
            return QuaternionPolynomial([c * other for c in self.coefficients])
        if isinstance(other, Quaternion):
            return QuaternionPolynomial([c * other for c in self.coefficients])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return QuaternionPolynomial([c * other for c in self.coefficients])
        if isinstance(other, Quaternion):
            return QuaternionPolynomial([other * c for c in self.coefficients])
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, QuaternionPolynomial):
            n = max(len(self.coefficients), len(other.coefficients))
            return QuaternionPolynomial(
                [self.coefficient(i) + other.coefficient(i) for i in range(n)])
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, QuaternionPolynomial):
            n = max(len(self.coefficients), len(other.coefficients))
            return QuaternionPolynomial(
                [self.coefficient(i) - other.coefficient(i) for i in range(n)])
        return NotImplemented

    def __neg__(self):
        return QuaternionPolynomial([-c for c in self.coefficients])

    def __repr__(self):
        return f"QuaternionPolynomial({list(self.coefficients)!r})"


class MotionPolynomial:
    """Dual-quaternion polynomial p(t) + eps*q(t)."""

    __slots__ = ("primal", "dual")

    def __init__(self, primal, dual):
        self.primal = primal
        self.dual = dual

    @classmethod
    def from_dual_quaternions(cls, coeffs):
        """Build from a list of DualQuaternion coefficients, ascending."""
        return cls(QuaternionPolynomial([c.primal for c in coeffs]),
                   QuaternionPolynomial([c.dual for c in coeffs]))

    @classmethod
    def constant(cls, c):
        return cls.from_dual_quaternions([c])

    @classmethod
    def t_minus(cls, h):
        """The linear polynomial t - h."""
        return cls.from_dual_quaternions([-h, DualQuaternion.identity()])

    @property
    def degree(self):
        return max(self.primal.degree, self.dual.degree)

    def coefficient(self, i):
        return DualQuaternion(self.primal.coefficient(i), self.dual.coefficient(i))

    def coefficients(self):
        return [self.coefficient(i) for i in range(self.degree + 1)]

    def leading_coefficient(self):
        return self.coefficient(self.degree)

    def evaluate(self, t):
        """Evaluate to a DualQuaternion; t = inf gives the leading coefficient."""
        if t == INF:
            return self.leading_coefficient()
        return DualQuaternion(self.primal.evaluate(t), self.dual.evaluate(t))

    def conjugate(self):
        return MotionPolynomial(self.primal.conjugate(), self.dual.conjugate())

    def max_abs(self):
        return max(self.primal.max_abs(), self.dual.max_abs())

    def __mul__(self, other):
        if isinstance(other, MotionPolynomial):
            return MotionPolynomial(
                self.primal * other.primal,
                self.primal * other.dual + self.dual * other.primal,
            )
        if isinstance(other, (int, float)):
            return MotionPolynomial(self.primal * other, self.dual * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return MotionPolynomial(self.primal * other, self.dual * other)
        return NotImplemented

    def right_mul(self, c):
        """Multiply every coefficient by the constant dual quaternion on the right."""
        return self * MotionPolynomial.constant(c)

    def left_mul(self, c):
        """Multiply every coefficient by the constant dual quaternion on the left."""
        return MotionPolynomial.constant(c) * self

    def __add__(self, other):
        if isinstance(other, MotionPolynomial):
            return MotionPolynomial(self.primal + other.primal, self.dual + other.dual)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, MotionPolynomial):
            return MotionPolynomial(self.primal - other.primal, self.dual - other.dual)
        return NotImplemented

    def __repr__(self):
        return f"MotionPolynomial({self.primal!r}, {self.dual!r})"


def norm_polynomial(motion):
    """Coefficients of the norm product C C* as a quaternion polynomial.

    For a genuine motion polynomial every coefficient is a real scalar (the
    vector parts, and the entire dual part of the product, vanish); the raw
    quaternion coefficients are returned so callers can inspect residues.
    """
    product = motion * motion.conjugate()
    return product.primal


def study_residue(motion):
    """Largest non-real residue of C C*, relative to the coefficient scale.

    This simultaneously measures the Study condition p q* + q p* = 0 (the
    dual part of the product) and the reality of the primal part.
    """
    product = motion * motion.conjugate()
    scale = motion.max_abs() ** 2
    if scale == 0.0:
        return 0.0
    worst = 0.0
    for c in product.dual.coefficients:
        worst = max(worst, c.max_abs())
    for c in product.primal.coefficients:
        worst = max(worst, abs(c.x), abs(c.y), abs(c.z))
    return worst / scale


def is_motion_polynomial(motion, tol=1e-9):
    """True when C C* is real, nonzero, and the Study residue is within tol."""
    if norm_polynomial(motion).is_zero():
        return False
    return study_residue(motion) <= tol
