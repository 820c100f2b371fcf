"""Scalar quaternion arithmetic.

Instances are treated as immutable: no method mutates its receiver, every
operation returns a fresh value, so sharing across threads is safe.  The
algebraic norm used throughout is q q* = w^2 + x^2 + y^2 + z^2 (the squared
Euclidean length); it is the quantity that decides invertibility.
"""

from __future__ import annotations

from .errors import SingularQuaternion
from .tolerances import TAU_SING


class Quaternion:
    """Quaternion w + x*i + y*j + z*k with real coordinates.

    Multiplication follows the Hamilton rules (i*j = k, j*k = i, k*i = j)
    and is not commutative.  3D points are embedded as imaginary quaternions
    via :meth:`from_vector`.
    """

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0.0, x=0.0, y=0.0, z=0.0):
        self.w = float(w)
        self.x = float(x)
        self.y = float(y)
        self.z = float(z)

    @classmethod
    def identity(cls):
        return cls(1.0, 0.0, 0.0, 0.0)

    @classmethod
    def zero(cls):
        return cls(0.0, 0.0, 0.0, 0.0)

    @classmethod
    def from_vector(cls, v):
        """Embed a 3D point/vector as the imaginary quaternion x*i+y*j+z*k."""
        return cls(0.0, v[0], v[1], v[2])

    def coords(self):
        return (self.w, self.x, self.y, self.z)

    def vector(self):
        return (self.x, self.y, self.z)

    def conjugate(self):
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self):
        """Algebraic norm q q*, i.e. the squared Euclidean length."""
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def inverse(self):
        """Multiplicative inverse q*/(q q*).

        Raises SingularQuaternion when the norm is at or below TAU_SING.
        """
        n = self.norm()
        if n <= TAU_SING:
            raise SingularQuaternion(f"quaternion with norm {n:.3e} is not invertible")
        return Quaternion(self.w / n, -self.x / n, -self.y / n, -self.z / n)

    def is_zero(self):
        return self.w == 0.0 and self.x == 0.0 and self.y == 0.0 and self.z == 0.0

    def max_abs(self):
        return max(abs(self.w), abs(self.x), abs(self.y), abs(self.z))

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            a, b = self, other
            return Quaternion(
                a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
            )
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.w / other, self.x / other, self.y / other, self.z / other)
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w + other.w, self.x + other.x,
                              self.y + other.y, self.z + other.z)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w - other.w, self.x - other.x,
                              self.y - other.y, self.z - other.z)
        return NotImplemented

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __eq__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self.coords() == other.coords()

    def __repr__(self):
        return f"Quaternion({self.w!r}, {self.x!r}, {self.y!r}, {self.z!r})"
