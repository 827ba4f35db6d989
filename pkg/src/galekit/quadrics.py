"""Systems of diagonal quadrics given by (Γ, δ) and the complexes they determine."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .complexes import SimplicialComplex
from .cones import Cone, contains
from .errors import (GalekitError, DEGENERATE, SIEGEL_FAIL, WEAK_HYP_FAIL, SIZE_LIMIT, BAD_INPUT)
from .fans import SUBSET_LIMIT, _grow, interior_point
from .gale import VectorConfiguration, vector_from_affine
from .linalg import Matrix
from .lp import LinearProgram, OPTIMAL
from .rational import to_rat, format_rat

REAL = "real"
HERMITIAN = "hermitian"


@dataclass(frozen=True)
class QuadricSystem:
    """γ_1 x_1² + ... + γ_m x_m² = δ (or |z_i|² in the Hermitian flavour)."""

    gamma: VectorConfiguration
    delta: tuple
    nondegenerate: bool
    flavor: str = REAL

    def equations(self):
        return [_render_row(row, rhs, self.flavor) for row, rhs in zip(self.gamma.rows(), self.delta)]

    def evaluate(self, point):
        """Residuals Σ γ_i |x_i|² − δ, exactly for rational input."""
        squares = [abs(x) ** 2 for x in point]
        return tuple(sum((g * s for g, s in zip(row, squares)), 0) - rhs
                     for row, rhs in zip(self.gamma.rows(), self.delta))

    def to_json(self):
        return {
            "gamma": [[format_rat(x) for x in row] for row in self.gamma.rows()],
            "delta": [format_rat(x) for x in self.delta],
            "nondegenerate": self.nondegenerate,
            "equations": self.equations(),
        }


def _render_row(row, rhs, flavor):
    terms = []
    for i, c in enumerate(row, start=1):
        if c == 0:
            continue
        var = f"|z{i}|^2" if flavor == HERMITIAN else f"x{i}^2"
        mag = abs(c)
        body = var if mag == 1 else f"{format_rat(mag)}*{var}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    lhs = " ".join(terms) if terms else "0"
    return f"{lhs} = {format_rat(rhs)}"


def _delta_vector(gamma, delta):
    delta = tuple(to_rat(x) for x in delta)
    if len(delta) != gamma.dim:
        raise GalekitError(BAD_INPUT, f"δ has length {len(delta)}, expected {gamma.dim}")
    return delta


def weakly_hyperbolic(gamma, delta):
    """δ lies in no cone spanned by fewer than k vectors of Γ.

    By Carathéodory it suffices to test the (k-1)-subsets.
    """
    k = gamma.dim
    if k == 0:
        return True
    size = min(k - 1, gamma.m)
    for subset in combinations(range(1, gamma.m + 1), size):
        if contains(Cone(k, tuple(gamma.select(subset))), delta):
            return False
    return True


def build_quadrics(gamma, delta, flavor=REAL):
    delta = _delta_vector(gamma, delta)
    nondeg = contains(Cone(gamma.dim, gamma.columns), delta) and weakly_hyperbolic(gamma, delta)
    return QuadricSystem(gamma, delta, nondeg, flavor)


def complex_from_delta(gamma, delta):
    """{I : δ ∈ cone Γ_Î} for a nondegenerate system."""
    system = build_quadrics(gamma, delta)
    if not system.nondegenerate:
        raise GalekitError(DEGENERATE, "system of quadrics is degenerate")
    if gamma.m > SUBSET_LIMIT:
        raise GalekitError(SIZE_LIMIT, f"m = {gamma.m} > {SUBSET_LIMIT}")
    delta = system.delta
    faces = _grow(gamma.m, lambda s: contains(Cone(gamma.dim, tuple(gamma.select_complement(s))),
                                                delta))
    return SimplicialComplex(gamma.m, tuple(faces))


def link_system(points, flavor=REAL):
    """Σ γ'_i x_i² = 0, Σ x_i² = 1 for an affine point configuration Γ'."""
    gamma = vector_from_affine(points)
    delta = tuple(Fraction(int(i == gamma.dim - 1)) for i in range(gamma.dim))
    if not contains(Cone(gamma.dim, gamma.columns), delta):
        raise GalekitError(SIEGEL_FAIL, "0 is not in the convex hull of the points")
    if not weakly_hyperbolic(gamma, delta):
        raise GalekitError(WEAK_HYP_FAIL, "0 is in the convex hull of fewer than dim + 1 points")
    return QuadricSystem(gamma, delta, True, flavor)


def euler_characteristic_RK(complex_):
    """Euler characteristic of the real moment-angle complex, one cube per face."""
    m = complex_.m
    return sum((-1) ** len(f) * 2 ** (m - len(f)) for f in complex_.faces())


def parity_check_for_complex_structure(fd):
    return (fd.m - fd.n) % 2 == 0


def _sample_points(poly):
    """An interior point and LP optima along ± coordinate directions."""
    samples = []
    w0 = interior_point(poly)
    if w0 is not None:
        samples.append(w0)
    n = poly.config.dim
    for j in range(n):
        for sign in (1, -1):
            lp = LinearProgram()
            w = lp.variables(n, free=True)
            for col, bi in zip(poly.config.columns, poly.b):
                lp.constrain({wi: x for wi, x in zip(w, col)}, ">=", -bi)
            res = lp.maximize({w[j]: sign})
            if res.status == OPTIMAL:
                samples.append(tuple(res.values[v] for v in w))
    return samples


def slice_check(poly, gamma, delta, points=None):
    """For sampled w in P, y = (<a_i, w> + b_i) satisfies y >= 0 and Γ y = δ."""
    delta = _delta_vector(gamma, delta)
    points = _sample_points(poly) if points is None else [tuple(to_rat(x) for x in p)
                                                           for p in points]
    g = Matrix.from_columns(gamma.columns, nrows=gamma.dim) if gamma.dim else None
    for w in points:
        y = poly.slack(w)
        if any(v < 0 for v in y):
            return False
        image = tuple(g @ y) if g is not None else ()
        if image != delta:
            return False
    return True
