"""Exception hierarchy with stable machine-readable error codes.

Every failure that can surface through the CLI or the HTTP service carries a
code from ERROR_CODES.  Schema problems (malformed documents, wrong arity,
unknown options) are distinguished from mathematical failures (singular or
degenerate input) because they map to different exit codes and HTTP statuses.
"""


class MotionForgeError(Exception):
    """Base class; `code` identifies the failure for machine consumption."""

    code = "INTERNAL"

    def payload(self):
        return {"code": self.code, "message": str(self)}


class SchemaError(MotionForgeError):
    """Malformed document or invalid option.  CLI exit 2, HTTP 400."""

    code = "BAD_SCHEMA"

    def __init__(self, message, code=None):
        super().__init__(message)
        if code is not None:
            self.code = code


# -- mathematical failures: CLI exit 3, HTTP 422 -----------------------------

class SingularQuaternion(MotionForgeError):
    code = "SINGULAR_QUATERNION"


class NotOnStudyQuadric(MotionForgeError):
    code = "NOT_ON_STUDY_QUADRIC"


class DuplicateNodes(MotionForgeError):
    code = "DUPLICATE_NODES"


class DegenerateInput(MotionForgeError):
    code = "DEGENERATE_INPUT"


class NoRealSolution(MotionForgeError):
    code = "NO_REAL_SOLUTION"


class NoRulings(MotionForgeError):
    code = "NO_RULINGS"


class DegenerateSpan(MotionForgeError):
    code = "DEGENERATE_SPAN"


class BadLambda(MotionForgeError):
    code = "BAD_LAMBDA"


class SingularSystem(MotionForgeError):
    code = "SINGULAR_SYSTEM"


class SingularDifference(MotionForgeError):
    code = "SINGULAR_DIFFERENCE"


class SingularWeight(MotionForgeError):
    code = "SINGULAR_WEIGHT"


class SingularElimination(MotionForgeError):
    code = "SINGULAR_ELIMINATION"


class UnsupportedDegree(MotionForgeError):
    code = "UNSUPPORTED_DEGREE"


class IrreducibleLeading(MotionForgeError):
    code = "IRREDUCIBLE_LEADING"


class NonGenericMotion(MotionForgeError):
    code = "NON_GENERIC_MOTION"


class RealNormRoots(MotionForgeError):
    code = "REAL_NORM_ROOTS"


class InsufficientFactorizations(MotionForgeError):
    code = "INSUFFICIENT_FACTORIZATIONS"


class IdenticalFactorizations(MotionForgeError):
    code = "IDENTICAL_FACTORIZATIONS"


class NoAxis(MotionForgeError):
    code = "NO_AXIS"


class SingularParameter(MotionForgeError):
    code = "SINGULAR_PARAMETER"


#: Every code the CLI or service may emit.
ERROR_CODES = frozenset({
    "BAD_SCHEMA",
    "BAD_ARITY",
    "BAD_OPTION",
    "SINGULAR_QUATERNION",
    "NOT_ON_STUDY_QUADRIC",
    "DUPLICATE_NODES",
    "DEGENERATE_INPUT",
    "NO_REAL_SOLUTION",
    "NO_RULINGS",
    "DEGENERATE_SPAN",
    "BAD_LAMBDA",
    "SINGULAR_SYSTEM",
    "SINGULAR_DIFFERENCE",
    "SINGULAR_WEIGHT",
    "SINGULAR_ELIMINATION",
    "UNSUPPORTED_DEGREE",
    "IRREDUCIBLE_LEADING",
    "NON_GENERIC_MOTION",
    "REAL_NORM_ROOTS",
    "INSUFFICIENT_FACTORIZATIONS",
    "IDENTICAL_FACTORIZATIONS",
    "NO_AXIS",
    "SINGULAR_PARAMETER",
    "INTERNAL",
})
