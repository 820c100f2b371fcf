"""Dual quaternions and the Study quadric predicates.

A dual quaternion p + eps*q (eps^2 = 0) represents a rigid displacement
exactly when it lies on the Study quadric, i.e. the polarized form
study_value(c) = 2*(p0*q0 + p1*q1 + p2*q2 + p3*q3) vanishes and the primal
part p is invertible.  Displacements act on points x (embedded as imaginary
quaternions) by

    x  ->  p x p^-1 + q p^-1

so the dual part encodes translation as q = t*p for translation vector t.
All values are immutable and all functions are pure.
"""

from __future__ import annotations

from .errors import NotOnStudyQuadric, SingularQuaternion
from .quaternion import Quaternion
from .tolerances import TAU_ALG


class DualQuaternion:
    """Pair (primal, dual) of quaternions with eps^2 = 0 multiplication."""

    __slots__ = ("primal", "dual")

    def __init__(self, primal, dual=None):
        self.primal = primal
        self.dual = dual if dual is not None else Quaternion.zero()

    @classmethod
    def identity(cls):
        return cls(Quaternion.identity(), Quaternion.zero())

    @classmethod
    def zero(cls):
        return cls(Quaternion.zero(), Quaternion.zero())

    @classmethod
    def from_coords(cls, coords):
        """Build from 8 numbers [p0, p1, p2, p3, q0, q1, q2, q3]."""
        return cls(Quaternion(*coords[:4]), Quaternion(*coords[4:]))

    @classmethod
    def from_translation(cls, v):
        """Pure translation by the vector v."""
        return cls(Quaternion.identity(), Quaternion.from_vector(v))

    @classmethod
    def from_rotation_translation(cls, rotation, translation):
        """Displacement rotating by the quaternion `rotation`, then shifting
        by `translation`; the result lies on the Study quadric exactly."""
        return cls(rotation, Quaternion.from_vector(translation) * rotation)

    def coords(self):
        return self.primal.coords() + self.dual.coords()

    def conjugate(self):
        """Quaternion conjugation of both parts: (p + eps q)* = p* + eps q*."""
        return DualQuaternion(self.primal.conjugate(), self.dual.conjugate())

    def eps_conjugate(self):
        """Dual-unit conjugation: p - eps q."""
        return DualQuaternion(self.primal, -self.dual)

    def inverse(self):
        """Inverse p^-1 - eps p^-1 q p^-1; requires invertible primal."""
        pi = self.primal.inverse()
        return DualQuaternion(pi, -(pi * self.dual * pi))

    def max_abs(self):
        return max(self.primal.max_abs(), self.dual.max_abs())

    def __mul__(self, other):
        if isinstance(other, DualQuaternion):
            return DualQuaternion(
                self.primal * other.primal,
                self.primal * other.dual + self.dual * other.primal,
            )
        if isinstance(other, (int, float)):
            return DualQuaternion(self.primal * other, self.dual * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return DualQuaternion(self.primal * other, self.dual * other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return DualQuaternion(self.primal / other, self.dual / other)
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, DualQuaternion):
            return DualQuaternion(self.primal + other.primal, self.dual + other.dual)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, DualQuaternion):
            return DualQuaternion(self.primal - other.primal, self.dual - other.dual)
        return NotImplemented

    def __neg__(self):
        return DualQuaternion(-self.primal, -self.dual)

    def __eq__(self, other):
        if not isinstance(other, DualQuaternion):
            return NotImplemented
        return self.primal == other.primal and self.dual == other.dual

    def __repr__(self):
        return f"DualQuaternion({self.primal!r}, {self.dual!r})"


def study_value(c):
    """Value of the Study quadric form: 2 * sum_i primal_i * dual_i.

    Zero (relative to the squared coordinate scale) together with an
    invertible primal part means `c` represents a rigid displacement.
    """
    p, q = c.primal, c.dual
    return 2.0 * (p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z)


def study_bilinear(a, b):
    """Symmetric bilinear polarization of the Study form.

    study_bilinear(c, c) == study_value(c).
    """
    return (a.primal.w * b.dual.w + a.primal.x * b.dual.x
            + a.primal.y * b.dual.y + a.primal.z * b.dual.z
            + b.primal.w * a.dual.w + b.primal.x * a.dual.x
            + b.primal.y * a.dual.y + b.primal.z * a.dual.z)


def project_origin(c):
    """Coordinates of the displaced frame origin: vector part of q p^-1.

    Raises SingularQuaternion for a non-invertible primal part and
    NotOnStudyQuadric when the scalar residue of q p^-1 shows that `c`
    does not satisfy the Study condition.
    """
    img = c.dual * c.primal.inverse()
    scale = max(img.max_abs(), 1.0)
    if abs(img.w) > TAU_ALG * scale:
        raise NotOnStudyQuadric(
            f"origin projection has scalar residue {img.w:.3e}; "
            "value is not on the Study quadric")
    return img.vector()


def act_on_point(c, x):
    """Rigid displacement of the point x: p x p^-1 + q p^-1."""
    pinv = c.primal.inverse()
    img = c.primal * Quaternion.from_vector(x) * pinv + c.dual * pinv
    return img.vector()


def normalize_projective(c):
    """Canonical representative of the projective class of `c`.

    Scales so the largest coordinate magnitude is 1, with the overall sign
    fixed by making the first significant coordinate positive.
    """
    coords = c.coords()
    m = max(abs(v) for v in coords)
    if m == 0.0:
        raise SingularQuaternion("cannot normalize the zero dual quaternion")
    scaled = [v / m for v in coords]
    for v in scaled:
        if abs(v) > 1e-9:
            if v < 0.0:
                scaled = [-u for u in scaled]
            break
    return DualQuaternion.from_coords(scaled)


def projective_distance(a, b):
    """Distance between projective classes: the smaller (over the sign
    ambiguity) maximum coordinate difference of the normalized values."""
    na = normalize_projective(a).coords()
    nb = normalize_projective(b).coords()
    direct = max(abs(u - v) for u, v in zip(na, nb))
    flipped = max(abs(u + v) for u, v in zip(na, nb))
    return min(direct, flipped)


def projectively_equal(a, b, tol=1e-8):
    return projective_distance(a, b) <= tol
