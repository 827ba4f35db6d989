"""Exact linear programming over Q.

Problems are assembled with ``LinearProgram`` (free or nonnegative
variables, =, <=, >= rows), scaled to integers and solved by a two-phase
primal simplex with Bland's rule on an integer-preserving tableau.  The
pivot loop lives in ``kernels``.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import kernels
from .errors import GalekitError, BAD_INPUT
from .rational import to_rat, common_denominator

INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"
OPTIMAL = "optimal"


@dataclass(frozen=True)
class LPResult:
    status: str
    values: tuple = ()
    objective: Fraction = None

    @property
    def feasible(self):
        return self.status != INFEASIBLE


class LinearProgram:
    """Small builder; variables are referred to by the ints it hands out."""

    def __init__(self):
        self._free = []
        self._rows = []

    def variable(self, free=False):
        self._free.append(bool(free))
        return len(self._free) - 1

    def variables(self, count, free=False):
        return [self.variable(free) for _ in range(count)]

    def constrain(self, coeffs, sense, rhs):
        if sense not in ("==", "<=", ">="):
            raise GalekitError(BAD_INPUT, f"unknown constraint sense {sense!r}")
        row = {}
        for var, c in coeffs.items():
            if type(c) is not int:
                c = to_rat(c)
            if c:
                row[var] = row.get(var, 0) + c
        self._rows.append((row, sense, rhs if type(rhs) is int else to_rat(rhs)))

    def feasible_point(self):
        return self.maximize({})

    def maximize(self, objective):
        return _solve(self._free, self._rows,
                      {k: v if type(v) is int else to_rat(v) for k, v in objective.items()})


def _integer_row(values):
    """Positive multiple of a row of ints and Fractions with all entries integral."""
    scale = 1
    for x in values:
        if type(x) is not int and x.denominator != 1:
            scale = lcm(scale, x.denominator)
    if scale == 1:
        return [int(x) for x in values]
    return [x.numerator * (scale // x.denominator) if type(x) is not int else x * scale
            for x in values]


def _solve(free, rows, objective):
    # column layout: one column per nonnegative var, two per free var, then slacks
    col_of = []
    ncols = 0
    for is_free in free:
        col_of.append(ncols)
        ncols += 2 if is_free else 1
    slack_rows = [i for i, (_, sense, _) in enumerate(rows) if sense != "=="]
    slack_col = {}
    for i in slack_rows:
        slack_col[i] = ncols
        ncols += 1
    n_struct = ncols

    tableau = []
    for i, (coeffs, sense, rhs) in enumerate(rows):
        dense = [0] * n_struct
        for var, c in coeffs.items():
            dense[col_of[var]] += c
            if free[var]:
                dense[col_of[var] + 1] -= c
        if sense == "<=":
            dense[slack_col[i]] = 1
        elif sense == ">=":
            dense[slack_col[i]] = -1
        dense.append(rhs)
        if rhs < 0:
            dense = [-x for x in dense]
        tableau.append(_integer_row(dense))

    nrows = len(tableau)
    # phase one: artificial basis, maximise minus the artificial sum
    for i, row in enumerate(tableau):
        rhs = row.pop()
        row.extend(int(i == k) for k in range(nrows))
        row.append(rhs)
    obj = [-sum(row[j] for row in tableau) for j in range(n_struct)]
    obj.extend([0] * nrows)
    obj.append(-sum(row[-1] for row in tableau))
    work = [obj] + tableau
    basis = [n_struct + i for i in range(nrows)]
    _, denom = kernels.simplex_iterate(work, basis, 1, n_struct)
    if work[0][-1] < 0:
        return LPResult(INFEASIBLE)

    # drive remaining artificials out of the basis, dropping redundant rows
    i = 1
    while i < len(work):
        if basis[i - 1] >= n_struct:
            enter = next((j for j in range(n_struct) if work[i][j] != 0), None)
            if enter is None:
                del work[i]
                del basis[i - 1]
                continue
            denom = kernels.pivot(work, i, enter, denom)
            basis[i - 1] = enter
        i += 1
    work = [row[:n_struct] + [row[-1]] for row in work]

    # phase two objective in the same integer scaling
    cost = [0] * n_struct
    for var, c in objective.items():
        cost[col_of[var]] += c
        if free[var]:
            cost[col_of[var] + 1] -= c
    icost = _integer_row(cost)
    obj = [-icost[j] * denom for j in range(n_struct)] + [0]
    for row, b in zip(work[1:], basis):
        cb = icost[b]
        if cb:
            obj = [o + cb * x for o, x in zip(obj, row)]
    work[0] = obj
    status, denom = kernels.simplex_iterate(work, basis, denom, n_struct)
    if status == kernels.UNBOUNDED:
        return LPResult(UNBOUNDED)

    colval = [Fraction(0)] * n_struct
    for row, b in zip(work[1:], basis):
        colval[b] = Fraction(row[-1], denom)
    values = []
    for var, is_free in enumerate(free):
        c = col_of[var]
        values.append(colval[c] - colval[c + 1] if is_free else colval[c])
    value = Fraction(sum((objective[k] * values[k] for k in objective), 0))
    return LPResult(OPTIMAL, tuple(values), value)


def positive_combination(generators, target):
    """Coefficients λ, all strictly positive, with Σ λ_i g_i = target, or None.

    Solved as: maximise s subject to Σ λ_i g_i = target, λ_i >= s, s <= 1.
    A witness exists exactly when the optimum is positive.  With no
    generators the empty combination works precisely for target = 0.
    """
    gens = [tuple(to_rat(x) for x in g) for g in generators]
    target = tuple(to_rat(x) for x in target)
    dim = len(target)
    if any(len(g) != dim for g in gens):
        raise GalekitError(BAD_INPUT, "generator and target dimensions differ")
    if not gens:
        return () if all(x == 0 for x in target) else None
    # solve with integer generators ints_i = scale_i * g_i, then undo the scaling
    scales = [common_denominator(g) for g in gens]
    ints = [[int(x * s) for x in g] for g, s in zip(gens, scales)]
    lp = LinearProgram()
    slack = lp.variables(len(gens))
    level = lp.variable()
    for r in range(dim):
        coeffs = {v: g[r] for v, g in zip(slack, ints)}
        coeffs[level] = sum(g[r] for g in ints)
        lp.constrain(coeffs, "==", target[r])
    lp.constrain({level: 1}, "<=", 1)
    res = lp.maximize({level: 1})
    if res.status != OPTIMAL or res.objective <= 0:
        return None
    t = res.values[level]
    return tuple((res.values[v] + t) * s for v, s in zip(slack, scales))
