"""Exact matrices over Q and Z.

``Matrix`` is an immutable row-major grid.  Rational matrices (``QMat``)
hold Fractions and integer matrices (``ZMat``) hold Python ints; both are
the same class so shape bookkeeping lives in one place.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .errors import GalekitError, BAD_INPUT
from .rational import to_rat, integer_vector


@dataclass(frozen=True)
class Matrix:
    nrows: int
    ncols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.nrows or any(len(r) != self.ncols for r in self.entries):
            raise GalekitError(BAD_INPUT, "ragged matrix")

    @classmethod
    def from_rows(cls, rows, ncols=None, integral=False):
        conv = int if integral else to_rat
        data = tuple(tuple(conv(x) for x in r) for r in rows)
        if ncols is None:
            if not data:
                raise GalekitError(BAD_INPUT, "column count of an empty matrix is ambiguous")
            ncols = len(data[0])
        return cls(len(data), ncols, data)

    @classmethod
    def from_columns(cls, columns, nrows=None, integral=False):
        cols = [list(c) for c in columns]
        if nrows is None:
            if not cols:
                raise GalekitError(BAD_INPUT, "row count of an empty matrix is ambiguous")
            nrows = len(cols[0])
        rows = [[c[i] for c in cols] for i in range(nrows)]
        return cls.from_rows(rows, ncols=len(cols), integral=integral)

    @classmethod
    def identity(cls, n, integral=False):
        one, zero = (1, 0) if integral else (Fraction(1), Fraction(0))
        return cls(n, n, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, nrows, ncols, integral=False):
        zero = 0 if integral else Fraction(0)
        return cls(nrows, ncols, tuple(tuple(zero for _ in range(ncols)) for _ in range(nrows)))

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(r[j] for r in self.entries)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def rows(self):
        return list(self.entries)

    def transpose(self):
        return Matrix(self.ncols, self.nrows, tuple(zip(*self.entries)) if self.nrows else
                      tuple(() for _ in range(self.ncols)))

    T = property(transpose)

    def select_columns(self, indices):
        idx = list(indices)
        return Matrix(self.nrows, len(idx), tuple(tuple(r[j] for j in idx) for r in self.entries))

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise GalekitError(BAD_INPUT, f"shape mismatch {self.shape} @ {other.shape}")
            cols = other.columns()
            data = tuple(tuple(sum((a * b for a, b in zip(r, c)), 0) for c in cols)
                         for r in self.entries)
            return Matrix(self.nrows, other.ncols, data)
        vec = tuple(other)
        if len(vec) != self.ncols:
            raise GalekitError(BAD_INPUT, "shape mismatch in matrix-vector product")
        return tuple(sum((a * b for a, b in zip(r, vec)), 0) for r in self.entries)

    def is_zero(self):
        return all(x == 0 for r in self.entries for x in r)

    def is_integral(self):
        return all(Fraction(x).denominator == 1 for r in self.entries for x in r)

    def to_integer(self):
        if not self.is_integral():
            raise GalekitError(BAD_INPUT, "matrix has non-integer entries")
        return Matrix(self.nrows, self.ncols, tuple(tuple(int(x) for x in r) for r in self.entries))

    def to_rational(self):
        return Matrix(self.nrows, self.ncols, tuple(tuple(Fraction(x) for x in r) for r in self.entries))

    def tolist(self):
        return [list(r) for r in self.entries]


QMat = Matrix
ZMat = Matrix


def as_matrix(m):
    if isinstance(m, Matrix):
        return m
    return Matrix.from_rows(m)


def rank(m):
    """Row rank over Q, via fraction-free elimination on integer rows."""
    m = as_matrix(m)
    if m.nrows == 0 or m.ncols == 0:
        return 0
    rows = [integer_vector(r) for r in m.entries]
    return kernels.integer_rank(rows, m.ncols)


def vectors_rank(vectors, dim):
    """Rank of a list of vectors of length ``dim``."""
    vectors = list(vectors)
    if not vectors or dim == 0:
        return 0
    return kernels.integer_rank([integer_vector(v) for v in vectors], dim)


def rref(m):
    """Reduced row echelon form: (nonzero rows, pivot columns)."""
    m = as_matrix(m)
    work = [[Fraction(x) for x in r] for r in m.entries]
    pivots = []
    r = 0
    for c in range(m.ncols):
        piv = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        p = work[r][c]
        if p != 1:
            work[r] = [x / p for x in work[r]]
        prow = work[r]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return [tuple(x) for x in work[:r]], pivots


def kernel_basis(m):
    """Columns spanning {x : m x = 0}; one column per free variable of the RREF."""
    m = as_matrix(m)
    reduced, pivots = rref(m)
    free = [j for j in range(m.ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * m.ncols
        x[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(x)
    return Matrix.from_columns(basis, nrows=m.ncols)


def solve(m, b):
    """Some x with m x = b (free variables zero), or None when inconsistent."""
    m = as_matrix(m)
    b = [to_rat(x) for x in b]
    if len(b) != m.nrows:
        raise GalekitError(BAD_INPUT, "right-hand side length mismatch")
    aug = Matrix(m.nrows, m.ncols + 1, tuple(tuple(r) + (bi,) for r, bi in zip(m.entries, b)))
    reduced, pivots = rref(aug)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [Fraction(0)] * m.ncols
    for row, p in zip(reduced, pivots):
        x[p] = row[-1]
    return tuple(x)


def determinant(m):
    m = as_matrix(m)
    if m.nrows != m.ncols:
        raise GalekitError(BAD_INPUT, "determinant of a non-square matrix")
    work = [[Fraction(x) for x in r] for r in m.entries]
    n = m.nrows
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if work[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            work[c], work[piv] = work[piv], work[c]
            det = -det
        p = work[c][c]
        det *= p
        for i in range(c + 1, n):
            f = work[i][c] / p
            if f:
                work[i] = [a - f * b for a, b in zip(work[i], work[c])]
    return det


def inverse(m):
    m = as_matrix(m)
    n = m.nrows
    if n != m.ncols:
        raise GalekitError(BAD_INPUT, "inverse of a non-square matrix")
    aug = Matrix(n, 2 * n, tuple(tuple(r) + tuple(Fraction(int(i == j)) for j in range(n))
                                 for i, r in enumerate(m.entries)))
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(reduced) < n:
        raise GalekitError(BAD_INPUT, "matrix is singular")
    return Matrix(n, n, tuple(tuple(r[n:]) for r in reduced))


def same_row_space(m1, m2):
    """True when the two matrices (same column count) have equal row spaces."""
    m1, m2 = as_matrix(m1), as_matrix(m2)
    return rref(m1)[0] == rref(m2)[0]
