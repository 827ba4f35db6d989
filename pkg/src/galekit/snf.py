"""Smith normal form over the integers, with unimodular transforms."""

from math import prod

from .errors import GalekitError, BAD_INPUT
from .linalg import Matrix, as_matrix


def _as_int_rows(m):
    m = as_matrix(m)
    if not m.is_integral():
        raise GalekitError(BAD_INPUT, "Smith normal form needs an integer matrix")
    return m, [[int(x) for x in r] for r in m.entries]


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(m):
    """Return (U, S, V) with U·M·V = S, U and V unimodular, S diagonal.

    The diagonal is nonnegative and each entry divides the next.
    """
    m, a = _as_int_rows(m)
    nr, nc = m.nrows, m.ncols
    u = _identity(nr)
    v = _identity(nc)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):
        # row dst += k * row src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, k):
        for row in a:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    for t in range(min(nr, nc)):
        while True:
            nonzero = [(abs(a[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if a[i][j]]
            if not nonzero:
                break
            _, pi, pj = min(nonzero)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // p
                    add_row(i, t, -q)
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, nc):
                if a[t][j]:
                    q = a[t][j] // p
                    add_col(j, t, -q)
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            # pivot isolated; enforce divisibility of the remaining block
            bad = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc)
                        if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if t < nr and t < nc and a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    as_m = lambda rows, r, c: Matrix(r, c, tuple(tuple(x) for x in rows))
    return as_m(u, nr, nr), as_m(a, nr, nc), as_m(v, nc, nc)


def elementary_divisors(m):
    """Nonzero diagonal entries of the Smith form, in divisibility order."""
    _, s, _ = smith_normal_form(m)
    return [s.entries[i][i] for i in range(min(s.nrows, s.ncols)) if s.entries[i][i] != 0]


def is_smith_form(s):
    s = as_matrix(s)
    diag = []
    for i, row in enumerate(s.entries):
        for j, x in enumerate(row):
            if i != j and x != 0:
                return False
    for i in range(min(s.nrows, s.ncols)):
        diag.append(s.entries[i][i])
    if any(d < 0 for d in diag):
        return False
    for d1, d2 in zip(diag, diag[1:]):
        if d1 == 0 and d2 != 0:
            return False
        if d1 != 0 and d2 % d1:
            return False
    return True


def lattice_index(m):
    """Index of the column lattice of a full-row-rank integer matrix in Z^rows."""
    divisors = elementary_divisors(m)
    if len(divisors) < as_matrix(m).nrows:
        raise GalekitError(BAD_INPUT, "columns do not span a full-rank lattice")
    return prod(divisors)


def integer_solution(m, b):
    """Some integer x with m x = b, or None.  ``m`` and ``b`` integral."""
    m, _ = _as_int_rows(m)
    u, s, v = smith_normal_form(m)
    ub = u @ [int(x) for x in b]
    y = []
    for i in range(m.ncols):
        d = s.entries[i][i] if i < m.nrows else 0
        if d == 0:
            y.append(0)
            continue
        if ub[i] % d:
            return None
        y.append(ub[i] // d)
    for i in range(m.ncols, m.nrows):
        if ub[i] != 0:
            return None
    for i in range(min(m.nrows, m.ncols)):
        if s.entries[i][i] == 0 and ub[i] != 0:
            return None
    return tuple(int(x) for x in (v @ y))
