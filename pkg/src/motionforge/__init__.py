"""motionforge: rational rigid-body motions and single-loop linkage synthesis.

Build motions that interpolate 3 or 4 poses, or 5, 7, or generally 2n+1
points, as dual-quaternion polynomials on the Study quadric; factorize them
into revolute factors; assemble closed 4R/6R linkages; sample and verify.
"""

from .dualquat import (DualQuaternion, act_on_point, normalize_projective,
                       project_origin, projective_distance, projectively_equal,
                       study_bilinear, study_value)
from .errors import ERROR_CODES, MotionForgeError, SchemaError
from .factorization import (Factorization, JointAxis, LinearFactor, Mechanism,
                            MonicResult, all_factorizations, axis_of,
                            build_mechanism, factorize, fixed_point_error,
                            monic_normalize)
from .interpolation import (BezierMotion, ViaTask, interpolate_five_points,
                            interpolate_four_poses, interpolate_points_generic,
                            interpolate_seven_points, interpolate_three_poses,
                            four_pose_nodes, lagrange_basis, to_bezier)
from .kinematics import (InterpolationReport, Pose, TrajectorySample, pose_at,
                         sample_trajectory, verify)
from .polynomial import (INF, MotionPolynomial, QuaternionPolynomial,
                         is_motion_polynomial, norm_polynomial, study_residue)
from .quaternion import Quaternion

__version__ = "0.1.0"

__all__ = [
    "DualQuaternion", "Quaternion", "MotionPolynomial", "QuaternionPolynomial",
    "BezierMotion", "ViaTask", "Pose", "TrajectorySample", "InterpolationReport",
    "LinearFactor", "Factorization", "JointAxis", "Mechanism", "MonicResult",
    "INF", "ERROR_CODES", "MotionForgeError", "SchemaError",
    "study_value", "study_bilinear", "project_origin", "act_on_point",
    "normalize_projective", "projective_distance", "projectively_equal",
    "norm_polynomial", "study_residue", "is_motion_polynomial",
    "lagrange_basis", "to_bezier", "interpolate_three_poses",
    "interpolate_four_poses", "interpolate_five_points",
    "interpolate_seven_points", "interpolate_points_generic", "four_pose_nodes",
    "monic_normalize", "factorize", "all_factorizations", "axis_of",
    "build_mechanism", "fixed_point_error",
    "pose_at", "sample_trajectory", "verify",
]
