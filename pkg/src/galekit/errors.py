"""Error type shared by every module.

Each failure carries a stable machine-readable code so the command line
front end can map it to ``{"error": code, "detail": ...}`` without string
matching.
"""


class GalekitError(Exception):
    """A precondition failure or an internal consistency failure."""

    def __init__(self, code, detail=""):
        super().__init__(f"{code}: {detail}" if detail else code)
        self.code = code
        self.detail = detail


# codes used across the package
NOT_SPANNING = "NOT_SPANNING"
NO_COMMON_HYPERPLANE = "NO_COMMON_HYPERPLANE"
NOT_FULL_DIM = "NOT_FULL_DIM"
DIM_LIMIT = "DIM_LIMIT"
SIZE_LIMIT = "SIZE_LIMIT"
GALE_MISMATCH = "GALE_MISMATCH"
DEPENDENT_SIMPLEX = "DEPENDENT_SIMPLEX"
NOT_A_FAN = "NOT_A_FAN"
NOT_COMPLETE = "NOT_COMPLETE"
NOT_GENERIC = "NOT_GENERIC"
DELTA_NOT_INTERIOR = "DELTA_NOT_INTERIOR"
DELTA_OUTSIDE = "DELTA_OUTSIDE"
INFINITE = "INFINITE"
NOT_INTEGRAL = "NOT_INTEGRAL"
DEGENERATE = "DEGENERATE"
SIEGEL_FAIL = "SIEGEL_FAIL"
WEAK_HYP_FAIL = "WEAK_HYP_FAIL"
ZERO_COORDINATE = "ZERO_COORDINATE"
POINT_NOT_IN_UK = "POINT_NOT_IN_UK"
LOCATION_AMBIGUOUS = "LOCATION_AMBIGUOUS"
NOT_PURE = "NOT_PURE"
NOT_LVMB = "NOT_LVMB"
BAD_INPUT = "BAD_INPUT"
