"""JSON document formats shared by the CLI and the HTTP service.

One canonical serializer keeps the two frontends byte-identical: keys are
sorted, separators are compact, and numbers print as Python's shortest
round-trip decimals.  Infinity never appears in documents; the pose schemes
encode their infinite node as null in provenance.
"""

from __future__ import annotations

import json
import math
import os

from .dualquat import DualQuaternion
from .errors import MotionForgeError, SchemaError, SingularParameter
from .factorization import (all_factorizations, axis_of, build_mechanism,
                            monic_normalize)
from .interpolation import (TASK_KINDS, ViaTask, interpolate_five_points,
                            interpolate_four_poses, interpolate_points_generic,
                            interpolate_seven_points, interpolate_three_poses)
from .kinematics import pose_at, verify
from .polynomial import INF, MotionPolynomial, QuaternionPolynomial
from .quaternion import Quaternion
from .tolerances import TAU_FIT

SCHEMA_VERSION = "1"

_TASK_ARITY = {"points5": 5, "points7": 7, "poses3": 3, "poses4": 4}


def canonical_json(obj):
    """Deterministic JSON text for a document."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), allow_nan=False)


def fit_tolerance():
    """Residual-reporting tolerance; MOTIONFORGE_TOLERANCE overrides it."""
    raw = os.environ.get("MOTIONFORGE_TOLERANCE")
    if raw is None:
        return TAU_FIT
    try:
        value = float(raw)
    except ValueError:
        return TAU_FIT
    return value if value > 0 else TAU_FIT


def _require(cond, message, code="BAD_SCHEMA"):
    if not cond:
        raise SchemaError(message, code=code)


def _finite_array(value, length, what):
    _require(isinstance(value, (list, tuple)), f"{what} must be an array")
    _require(len(value) == length, f"{what} must have {length} entries")
    out = []
    for v in value:
        _require(isinstance(v, (int, float)) and not isinstance(v, bool),
                 f"{what} entries must be numbers")
        v = float(v)
        _require(math.isfinite(v), f"{what} entries must be finite")
        out.append(v)
    return out


def parse_task_document(doc):
    """Validate a task document and build the ViaTask it describes."""
    _require(isinstance(doc, dict), "task document must be a JSON object")
    _require(doc.get("schema_version") == SCHEMA_VERSION,
             f"schema_version must be {SCHEMA_VERSION!r}")
    task = doc.get("task")
    _require(isinstance(task, dict), "missing task object")
    kind = task.get("kind")
    _require(kind in TASK_KINDS, f"unknown scheme kind {kind!r}")

    options = doc.get("options", {})
    _require(isinstance(options, dict), "options must be an object")
    for key in options:
        _require(key in ("lambda", "branch", "via_times", "secondary_times"),
                 f"unknown option {key!r}", code="BAD_OPTION")

    points = poses = None
    if kind.startswith("points"):
        raw = task.get("points")
        _require(isinstance(raw, (list, tuple)), "points must be an array")
        expected = _TASK_ARITY.get(kind)
        if expected is not None:
            _require(len(raw) == expected,
                     f"{kind} needs {expected} points, got {len(raw)}",
                     code="BAD_ARITY")
        else:
            _require(len(raw) >= 3 and len(raw) % 2 == 1,
                     f"{kind} needs an odd number (>= 3) of points, got {len(raw)}",
                     code="BAD_ARITY")
        points = [_finite_array(p, 3, "point") for p in raw]
    else:
        raw = task.get("poses")
        _require(isinstance(raw, (list, tuple)), "poses must be an array")
        expected = _TASK_ARITY[kind]
        _require(len(raw) == expected,
                 f"{kind} needs {expected} poses, got {len(raw)}",
                 code="BAD_ARITY")
        poses = [DualQuaternion.from_coords(_finite_array(p, 8, "pose"))
                 for p in raw]

    via_times = task.get("via_times", options.get("via_times"))
    secondary = task.get("secondary_times", options.get("secondary_times"))
    if kind != "pointsGeneric":
        _require(via_times is None and secondary is None,
                 "custom via times are only supported by the generic scheme",
                 code="BAD_OPTION")
    else:
        if via_times is not None:
            via_times = _finite_array(via_times, (len(points) + 1) // 2, "via_times")
        if secondary is not None:
            secondary = _finite_array(secondary, (len(points) - 1) // 2,
                                      "secondary_times")

    lam = options.get("lambda")
    branch = options.get("branch", "k1")
    if kind == "poses4":
        _require(branch in ("k1", "k2"),
                 f"branch must be 'k1' or 'k2', got {branch!r}", code="BAD_OPTION")
        if lam is not None:
            _require(isinstance(lam, (int, float)) and not isinstance(lam, bool)
                     and math.isfinite(float(lam)),
                     "lambda must be a finite number", code="BAD_OPTION")
            lam = float(lam)
    else:
        _require(lam is None and branch == "k1",
                 "lambda/branch apply to the poses4 scheme only", code="BAD_OPTION")

    try:
        return ViaTask(kind, points=points, poses=poses, via_times=via_times,
                       secondary_times=secondary, lam=lam, branch=branch)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def run_task(task):
    """Interpolate, returning (motion, bezier or None, report)."""
    bezier = None
    if task.kind == "points5":
        motion, bezier = interpolate_five_points(task.points)
    elif task.kind == "points7":
        motion, bezier = interpolate_seven_points(task.points)
    elif task.kind == "pointsGeneric":
        motion = interpolate_points_generic(task.points, task.via_times,
                                            task.secondary_times)
    elif task.kind == "poses3":
        motion = interpolate_three_poses(*task.poses)
    else:
        motion = interpolate_four_poses(task.poses, task.branch, task.lam)
    report = verify(task, motion)
    return motion, bezier, report


def _quat_array(q):
    return list(q.coords())


def motion_document(motion, bezier=None, scheme=None, via_times=None):
    """MotionDocument dict for a motion polynomial."""
    degree = motion.degree
    doc = {
        "schema_version": SCHEMA_VERSION,
        "degree": degree,
        "primal": [_quat_array(motion.primal.coefficient(i)) for i in range(degree + 1)],
        "dual": [_quat_array(motion.dual.coefficient(i)) for i in range(degree + 1)],
    }
    if bezier is not None:
        doc["bezier"] = {
            "weights": [_quat_array(u) for u in bezier.weights],
            "control_points": [_quat_array(p) for p in bezier.control_points],
        }
    if scheme is not None:
        doc["provenance"] = {
            "scheme": scheme,
            "via_times": [None if t == INF else t for t in (via_times or [])],
        }
    return doc


def parse_motion_document(doc):
    """Validate a MotionDocument and rebuild the MotionPolynomial."""
    _require(isinstance(doc, dict), "motion document must be a JSON object")
    _require(doc.get("schema_version") == SCHEMA_VERSION,
             f"schema_version must be {SCHEMA_VERSION!r}")
    degree = doc.get("degree")
    _require(isinstance(degree, int) and not isinstance(degree, bool) and degree >= 0,
             "degree must be a non-negative integer")
    primal = doc.get("primal")
    dual = doc.get("dual")
    for name, arr in (("primal", primal), ("dual", dual)):
        _require(isinstance(arr, (list, tuple)), f"{name} must be an array")
        _require(len(arr) == degree + 1,
                 f"{name} must have degree+1 = {degree + 1} coefficient rows",
                 code="BAD_ARITY")
    pq = [Quaternion(*_finite_array(row, 4, "primal coefficient")) for row in primal]
    dq = [Quaternion(*_finite_array(row, 4, "dual coefficient")) for row in dual]
    return MotionPolynomial(QuaternionPolynomial(pq), QuaternionPolynomial(dq))


def report_document(report, tol=None):
    tol = fit_tolerance() if tol is None else tol
    residuals = [None if math.isinf(r) else r for r in report.residuals]
    max_res = report.max_residual
    return {
        "residuals": residuals,
        "max_residual": None if math.isinf(max_res) else max_res,
        "study_residue": report.study_residue,
        "tolerance": tol,
        "ok": report.ok(tol),
    }


def interpolate_document(doc):
    """TaskDocument dict -> (MotionDocument dict, report dict)."""
    task = parse_task_document(doc)
    motion, bezier, report = run_task(task)
    times = task.schedule()
    motion_doc = motion_document(motion, bezier, scheme=task.kind, via_times=times)
    return motion_doc, report_document(report)


def _axis_document(axis):
    return {"direction": list(axis.direction), "moment": list(axis.moment)}


def factorize_document(doc, with_mechanisms=False):
    """MotionDocument dict -> factorization (and optionally mechanism) dict."""
    motion = parse_motion_document(doc)
    monic = monic_normalize(motion)
    minimum = 2 if with_mechanisms else 1
    factorizations = all_factorizations(monic.motion, minimum=minimum)
    out = {
        "schema_version": SCHEMA_VERSION,
        "degree": monic.motion.degree,
        "monic": {
            "primal": [_quat_array(monic.motion.primal.coefficient(i))
                       for i in range(monic.motion.degree + 1)],
            "dual": [_quat_array(monic.motion.dual.coefficient(i))
                     for i in range(monic.motion.degree + 1)],
            "right_cofactor": _quat_array(monic.right_cofactor.primal)
            + _quat_array(monic.right_cofactor.dual),
            "shift": monic.shift,
        },
        "factorizations": [
            {
                "order": list(f.order),
                "roots": [_quat_array(fa.h.primal) + _quat_array(fa.h.dual)
                          for fa in f.factors],
                "axes": [_axis_document(axis_of(fa)) for fa in f.factors],
                "reconstruction_error": f.reconstruction_error(),
            }
            for f in factorizations
        ],
    }
    if with_mechanisms:
        mechanisms = []
        for i in range(len(factorizations)):
            for j in range(i + 1, len(factorizations)):
                mech = build_mechanism(factorizations[i], factorizations[j])
                mechanisms.append({
                    "pair": [i, j],
                    "joints": [_axis_document(a) for a in mech.loop_joints],
                })
        out["mechanisms"] = mechanisms
    return out


def sample_document(doc, count=None, at=None, t_range=(0.0, 1.0)):
    """MotionDocument dict -> sampled poses document.

    Parameters where the motion is singular become gap rows instead of
    failing the whole sweep.
    """
    motion = parse_motion_document(doc)
    if at is not None:
        ts = [float(t) for t in at]
    else:
        lo, hi = float(t_range[0]), float(t_range[1])
        ts = [lo + (hi - lo) * i / (count - 1) for i in range(count)]
    rows = []
    for t in ts:
        try:
            pose = pose_at(motion, t)
        except SingularParameter:
            rows.append({"t": t, "singular": True})
            continue
        rows.append({
            "t": t,
            "rotation": [list(r) for r in pose.rotation.tolist()],
            "translation": list(pose.translation.tolist()),
        })
    return {"schema_version": SCHEMA_VERSION, "samples": rows}


def error_document(exc):
    if isinstance(exc, MotionForgeError):
        payload = exc.payload()
    else:
        payload = {"code": "INTERNAL", "message": str(exc)}
    return {"schema_version": SCHEMA_VERSION, "error": payload}
