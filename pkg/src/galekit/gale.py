"""Vector and point configurations and the linear/affine Gale transforms."""

from dataclasses import dataclass
from fractions import Fraction

from .errors import GalekitError, NOT_SPANNING, NO_COMMON_HYPERPLANE, BAD_INPUT
from .linalg import Matrix, vectors_rank, kernel_basis, rref, solve, same_row_space
from .lp import LinearProgram, positive_combination, OPTIMAL
from .rational import to_rat, dot
from .sets import complement


@dataclass(frozen=True)
class VectorConfiguration:
    """m column vectors in a ``dim``-dimensional space; repeats and zeros allowed."""

    dim: int
    columns: tuple
    label: str = ""

    def __post_init__(self):
        cols = tuple(tuple(to_rat(x) for x in c) for c in self.columns)
        if any(len(c) != self.dim for c in cols):
            raise GalekitError(BAD_INPUT, "column length differs from dim")
        object.__setattr__(self, "columns", cols)

    @classmethod
    def from_rows(cls, rows, label="", m=None):
        rows = [list(r) for r in rows]
        if not rows:
            if m is None:
                raise GalekitError(BAD_INPUT, "zero-dimensional configuration needs m")
            return cls(0, tuple(() for _ in range(m)), label)
        return cls(len(rows), tuple(zip(*rows)), label)

    @property
    def m(self):
        return len(self.columns)

    @property
    def matrix(self):
        return Matrix.from_columns(self.columns, nrows=self.dim)

    def rows(self):
        return [tuple(c[i] for c in self.columns) for i in range(self.dim)]

    def rank(self):
        return vectors_rank(self.columns, self.dim)

    def spans(self):
        return self.rank() == self.dim

    def select(self, indices):
        """Columns for a 1-based index set, in increasing index order."""
        return [self.columns[i - 1] for i in sorted(indices)]

    def select_complement(self, indices):
        return self.select(complement(indices, self.m))

    def is_integral(self):
        return all(x.denominator == 1 for c in self.columns for x in c)

    def extended(self, column):
        column = tuple(to_rat(x) for x in column)
        return VectorConfiguration(self.dim, self.columns + (column,), self.label)


@dataclass(frozen=True)
class PointConfiguration:
    """m points in a ``dim``-dimensional affine space."""

    dim: int
    points: tuple

    def __post_init__(self):
        pts = tuple(tuple(to_rat(x) for x in p) for p in self.points)
        if any(len(p) != self.dim for p in pts):
            raise GalekitError(BAD_INPUT, "point length differs from dim")
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_rows(cls, rows, m=None):
        rows = [list(r) for r in rows]
        if not rows:
            if m is None:
                raise GalekitError(BAD_INPUT, "zero-dimensional point set needs m")
            return cls(0, tuple(() for _ in range(m)))
        return cls(len(rows), tuple(zip(*rows)))

    @property
    def m(self):
        return len(self.points)

    def select(self, indices):
        return [self.points[i - 1] for i in sorted(indices)]

    def affinely_spans(self):
        homog = [p + (Fraction(1),) for p in self.points]
        return vectors_rank(homog, self.dim + 1) == self.dim + 1


def gale_dual(cfg):
    """Canonical Gale dual: the RREF of a kernel basis of the configuration matrix."""
    if not cfg.spans():
        raise GalekitError(NOT_SPANNING, f"rank {cfg.rank()} < dim {cfg.dim}")
    basis = kernel_basis(cfg.matrix)
    n = basis.ncols
    if n == 0:
        return VectorConfiguration(0, tuple(() for _ in range(cfg.m)), _dual_label(cfg))
    reduced, _ = rref(basis.transpose())
    return VectorConfiguration.from_rows(reduced, _dual_label(cfg))


def _dual_label(cfg):
    return f"{cfg.label}*" if cfg.label else ""


def is_gale_pair(c1, c2):
    if c1.m != c2.m:
        return False
    for g in c1.rows():
        for a in c2.rows():
            if dot(g, a) != 0:
                return False
    return c1.rank() + c2.rank() == c1.m


def dual_span_check(cfg, indices, dual=None):
    """(A_I independent, dual columns off I span) for a 1-based index set I."""
    dual = gale_dual(cfg) if dual is None else dual
    indices = frozenset(indices)
    independent = vectors_rank(cfg.select(indices), cfg.dim) == len(indices)
    dual_spans = vectors_rank(dual.select_complement(indices), dual.dim) == dual.dim
    return independent, dual_spans


def has_positive_relation(cfg):
    """Strictly positive r with Σ r_i col_i = 0, or None."""
    if cfg.m == 0:
        return None
    return positive_combination(cfg.columns, (0,) * cfg.dim)


def common_hyperplane(cfg):
    """v with <γ_i, v> = 1 for every column, or None."""
    if cfg.m == 0:
        return tuple(Fraction(0) for _ in range(cfg.dim))
    return solve(Matrix.from_rows(cfg.columns, ncols=cfg.dim), [1] * cfg.m)


def rescale_to_hyperplane(cfg):
    """Scale each column by a positive number so that all lie on one affine hyperplane."""
    lp = LinearProgram()
    v = lp.variables(cfg.dim, free=True)
    for col in cfg.columns:
        lp.constrain({vi: c for vi, c in zip(v, col)}, ">=", 1)
    res = lp.feasible_point()
    if res.status != OPTIMAL:
        raise GalekitError(NO_COMMON_HYPERPLANE, "no linear functional is positive on every column")
    w = [res.values[i] for i in v]
    cols = [tuple(x / dot(col, w) for x in col) for col in cfg.columns]
    return VectorConfiguration(cfg.dim, tuple(cols), cfg.label)


def affine_from_vector(cfg):
    """Point configuration Γ' with Γ equivalent to the homogenisation of Γ'.

    A functional v with <γ_i, v> = 1 is completed to a basis of V by the
    standard vectors e_j, j != p, where p is the last coordinate with v_p != 0.
    In that basis γ_i has coordinates (γ_i without entry p, 1).
    """
    v = common_hyperplane(cfg)
    if v is None:
        raise GalekitError(NO_COMMON_HYPERPLANE, "no v with <γ_i, v> = 1 for all i")
    if cfg.dim == 0:
        raise GalekitError(NO_COMMON_HYPERPLANE, "zero-dimensional configuration")
    p = max(j for j in range(cfg.dim) if v[j] != 0)
    points = tuple(tuple(x for j, x in enumerate(c) if j != p) for c in cfg.columns)
    return PointConfiguration(cfg.dim - 1, points)


def vector_from_affine(points, label=""):
    cols = tuple(p + (Fraction(1),) for p in points.points)
    return VectorConfiguration(points.dim + 1, cols, label)


def kernel_equals_row_space(cfg, dual):
    """The kernel of cfg's matrix equals the row space of dual's matrix."""
    basis = kernel_basis(cfg.matrix)
    if basis.ncols == 0 or dual.dim == 0:
        return basis.ncols == 0 and dual.rank() == 0
    return same_row_space(basis.transpose(), Matrix.from_rows(dual.rows(), ncols=dual.m))


def same_configuration_space(c1, c2):
    """Equal row spaces: the two matrices present Gale-equivalent configurations."""
    if c1.m != c2.m:
        return False
    if c1.dim == 0 or c2.dim == 0:
        return c1.rank() == c2.rank() == 0
    return same_row_space(Matrix.from_rows(c1.rows(), ncols=c1.m),
                          Matrix.from_rows(c2.rows(), ncols=c2.m))
