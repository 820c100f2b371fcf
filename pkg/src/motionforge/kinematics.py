"""Pose extraction, trajectory sampling, and end-to-end verification."""

from __future__ import annotations

import math

import numpy as np

from .dualquat import project_origin, projective_distance
from .errors import MotionForgeError, SingularParameter
from .interpolation import POINT_KINDS, four_pose_nodes
from .polynomial import INF, study_residue
from .tolerances import TAU_FIT, TAU_SING


class Pose:
    """Rigid displacement as an orthonormal rotation matrix plus translation."""

    __slots__ = ("rotation", "translation")

    def __init__(self, rotation, translation):
        self.rotation = np.asarray(rotation, dtype=float)
        self.translation = np.asarray(translation, dtype=float)

    @classmethod
    def identity(cls):
        return cls(np.eye(3), np.zeros(3))

    def apply(self, point):
        return self.rotation @ np.asarray(point, dtype=float) + self.translation

    def __repr__(self):
        return f"Pose(translation={self.translation.tolist()})"


class TrajectorySample:
    """One sampled instant of a motion."""

    __slots__ = ("t", "pose", "origin", "point_image")

    def __init__(self, t, pose, origin, point_image=None):
        self.t = t
        self.pose = pose
        self.origin = tuple(origin)
        self.point_image = None if point_image is None else tuple(point_image)


class InterpolationReport:
    """Residuals of a motion against its task, plus the Study defect."""

    __slots__ = ("motion", "bezier", "residuals", "study_residue")

    def __init__(self, motion, bezier, residuals, study):
        self.motion = motion
        self.bezier = bezier
        self.residuals = tuple(residuals)
        self.study_residue = study

    @property
    def max_residual(self):
        return max(self.residuals) if self.residuals else 0.0

    def ok(self, tol=TAU_FIT):
        return self.max_residual <= tol and self.study_residue <= tol


def _rotation_matrix(p):
    """Rotation matrix of a nonzero quaternion (normalized internally)."""
    n = p.norm()
    w, x, y, z = (v / math.sqrt(n) for v in p.coords())
    return np.array([
        [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
        [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
        [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
    ])


def pose_at(motion, t):
    """Pose of the moving frame at parameter t (inf uses the leading pose)."""
    c = motion.evaluate(t)
    scale = max(c.max_abs(), 1e-300)
    if c.primal.norm() <= TAU_SING * scale * scale:
        raise SingularParameter(f"motion primal part vanishes at t={t}")
    translation = (c.dual * c.primal.inverse()).vector()
    return Pose(_rotation_matrix(c.primal), np.array(translation))


def sample_trajectory(motion, point=None, ts=()):
    """Samples of the motion at the given parameters.

    ``origin`` is the displaced frame origin; when ``point`` is given its
    displaced image is attached as well.  A singular parameter raises
    SingularParameter naming the offending t.
    """
    samples = []
    for t in ts:
        try:
            pose = pose_at(motion, t)
        except SingularParameter as exc:
            raise SingularParameter(f"cannot sample at t={t}: {exc}") from exc
        origin = tuple(pose.translation)
        image = None if point is None else tuple(pose.apply(point))
        samples.append(TrajectorySample(t, pose, origin, image))
    return samples


def _point_residual(motion, t, target):
    try:
        c = motion.evaluate(t)
        origin = project_origin(c)
    except MotionForgeError:
        return math.inf
    return math.dist(origin, target)


def _pose_residual(motion, t, target):
    try:
        value = motion.evaluate(t)
        return projective_distance(value, target)
    except MotionForgeError:
        return math.inf


def verify(task, motion):
    """Residuals of a motion against a task; reports and never raises.

    Point residuals are Euclidean distances of the origin trajectory from
    the via points at their scheduled times; pose residuals are projective
    coordinate distances.  Unverifiable data (singular evaluation, no
    ruling geometry) shows up as infinite residuals.
    """
    residuals = []
    if task.kind in POINT_KINDS:
        times = task.schedule()
        for point, t in zip(task.points, times):
            residuals.append(_point_residual(motion, t, point))
    elif task.kind == "poses3":
        for pose, t in zip(task.poses, (0.0, 1.0, INF)):
            residuals.append(_pose_residual(motion, t, pose))
    else:
        try:
            _, _, ts = four_pose_nodes(task.poses, task.branch)
            times = [INF] + list(ts)
        except MotionForgeError:
            times = None
        if times is None:
            residuals = [math.inf] * len(task.poses)
        else:
            for pose, t in zip(task.poses, times):
                residuals.append(_pose_residual(motion, t, pose))
    return InterpolationReport(motion, None, residuals, study_residue(motion))
