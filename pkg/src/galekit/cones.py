"""Polyhedral cones over Q: membership, relative interiors, faces, H-representations."""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import GalekitError, BAD_INPUT, NOT_FULL_DIM, DIM_LIMIT
from .linalg import Matrix, kernel_basis, vectors_rank
from .lp import LinearProgram, positive_combination, OPTIMAL
from .rational import to_rat, dot, primitive_vector, integer_vector

FACET_DIM_LIMIT = 6


@dataclass(frozen=True)
class Halfspace:
    """{x : <normal, x> >= 0}."""

    normal: tuple

    def __post_init__(self):
        normal = tuple(to_rat(x) for x in self.normal)
        if all(x == 0 for x in normal):
            raise GalekitError(BAD_INPUT, "halfspace normal must be nonzero")
        object.__setattr__(self, "normal", normal)

    def contains(self, x):
        return dot(self.normal, x) >= 0


@dataclass(frozen=True)
class Cone:
    """cone(generators); the cone on no generators is {0}."""

    ambient_dim: int
    generators: tuple = field(default=())

    def __post_init__(self):
        gens = tuple(tuple(to_rat(x) for x in g) for g in self.generators)
        if any(len(g) != self.ambient_dim for g in gens):
            raise GalekitError(BAD_INPUT, "generator length differs from ambient_dim")
        object.__setattr__(self, "generators", gens)


def _check_point(c, x):
    x = tuple(to_rat(v) for v in x)
    if len(x) != c.ambient_dim:
        raise GalekitError(BAD_INPUT, "point dimension differs from ambient_dim")
    return x


def contains(c, x):
    x = _check_point(c, x)
    if not c.generators:
        return all(v == 0 for v in x)
    lp = LinearProgram()
    lam = lp.variables(len(c.generators))
    for r in range(c.ambient_dim):
        lp.constrain({v: g[r] for v, g in zip(lam, c.generators)}, "==", x[r])
    return lp.feasible_point().status == OPTIMAL


def relint_contains(c, x):
    x = _check_point(c, x)
    return positive_combination(c.generators, x) is not None


def relints_intersect(c1, c2):
    """A primitive integer point in relint(c1) ∩ relint(c2), or None.

    LP: Σ λ_i g_i = Σ μ_j h_j with λ, μ >= s, s <= 1, maximise s.
    """
    if c1.ambient_dim != c2.ambient_dim:
        raise GalekitError(BAD_INPUT, "cones live in different spaces")
    # positive rescaling of generators leaves cones and relints unchanged
    gens1 = [integer_vector(g) for g in c1.generators]
    gens2 = [integer_vector(h) for h in c2.generators]
    dim = c1.ambient_dim
    lp = LinearProgram()
    lam = lp.variables(len(gens1))
    mu = lp.variables(len(gens2))
    level = lp.variable()
    for r in range(dim):
        coeffs = {v: g[r] for v, g in zip(lam, gens1)}
        for v, h in zip(mu, gens2):
            coeffs[v] = coeffs.get(v, 0) - h[r]
        coeffs[level] = sum(g[r] for g in gens1) - sum(h[r] for h in gens2)
        lp.constrain(coeffs, "==", 0)
    lp.constrain({level: 1}, "<=", 1)
    res = lp.maximize({level: 1})
    if res.status != OPTIMAL or res.objective <= 0:
        return None
    t = res.values[level]
    point = [0] * dim
    for v, g in zip(lam, gens1):
        coef = res.values[v] + t
        for r in range(dim):
            point[r] += coef * g[r]
    return primitive_vector(point)


def is_strongly_convex(c):
    """No line inside: no nonzero generator g with -g in the cone."""
    gens = c.generators
    for i, g in enumerate(gens):
        if all(x == 0 for x in g):
            continue
        lp = LinearProgram()
        lam = lp.variables(len(gens))
        for r in range(c.ambient_dim):
            lp.constrain({v: h[r] for v, h in zip(lam, gens)}, "==", 0)
        lp.constrain({lam[i]: 1}, "<=", 1)
        res = lp.maximize({lam[i]: 1})
        if res.status == OPTIMAL and res.objective > 0:
            return False
    return True


def cone_dim(c):
    return vectors_rank(c.generators, c.ambient_dim)


def _orthogonal_complement(vectors, dim):
    """Basis of {w : <v, w> = 0 for all v}."""
    vectors = [v for v in vectors if any(x != 0 for x in v)]
    if not vectors:
        return [tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)]
    basis = kernel_basis(Matrix.from_rows(vectors, ncols=dim))
    return [tuple(col) for col in basis.columns()]


def halfspace_representation(c):
    """(equations, inequalities) with c = {x : <e, x> = 0, <h, x> >= 0}.

    Inequalities are facet normals taken inside the linear span of c, as
    primitive integer vectors; they are found by testing every hyperplane
    through rank-1 independent generators.
    """
    dim = c.ambient_dim
    gens = [g for g in c.generators if any(x != 0 for x in g)]
    equations = _orthogonal_complement(gens, dim)
    r = vectors_rank(gens, dim)
    inequalities = []
    seen = set()
    if r == 0:
        return [primitive_vector(e) for e in equations], []
    for subset in combinations(range(len(gens)), r - 1):
        chosen = [gens[i] for i in subset]
        if vectors_rank(chosen, dim) != r - 1:
            continue
        normal_space = _orthogonal_complement(chosen + equations, dim)
        if len(normal_space) != 1:
            continue
        w = normal_space[0]
        values = [dot(g, w) for g in gens]
        if all(v >= 0 for v in values) and any(v > 0 for v in values):
            pass
        elif all(v <= 0 for v in values) and any(v < 0 for v in values):
            w = tuple(-x for x in w)
        else:
            continue
        w = primitive_vector(w)
        if w not in seen:
            seen.add(w)
            inequalities.append(w)
    inequalities.sort()
    return [primitive_vector(e) for e in equations], inequalities


def facets(c):
    """Facet halfspaces of a full-dimensional cone in dimension at most 6."""
    if c.ambient_dim > FACET_DIM_LIMIT:
        raise GalekitError(DIM_LIMIT, f"ambient dimension {c.ambient_dim} > {FACET_DIM_LIMIT}")
    if cone_dim(c) != c.ambient_dim:
        raise GalekitError(NOT_FULL_DIM, f"cone dimension {cone_dim(c)} < {c.ambient_dim}")
    _, inequalities = halfspace_representation(c)
    return [Halfspace(w) for w in inequalities]


def is_face(sub, sup):
    """sub is a face of sup (sub's generators assumed inside sup)."""
    if sub.ambient_dim != sup.ambient_dim:
        raise GalekitError(BAD_INPUT, "cones live in different spaces")
    dim = sup.ambient_dim
    lp = LinearProgram()
    w = lp.variables(dim, free=True)
    for g in sub.generators:
        lp.constrain({wi: x for wi, x in zip(w, g)}, "==", 0)
    for h in sup.generators:
        bound = 0 if contains(sub, h) else 1
        lp.constrain({wi: x for wi, x in zip(w, h)}, ">=", bound)
    return lp.feasible_point().status == OPTIMAL


def cone_from_inequalities(dim, equations, inequalities):
    """Generators of {x : <e, x> = 0, <h, x> >= 0} by double description.

    Returns (rays, lines): the cone is cone(rays) plus the span of lines.
    Rays are primitive integer vectors, extreme modulo the lines.
    """
    lines = [tuple(Fraction(x) for x in v) for v in _orthogonal_complement(equations, dim)]
    rays = []
    tight = []  # per ray: set of processed inequality indices it satisfies with equality
    ineqs = [tuple(to_rat(x) for x in h) for h in inequalities]
    for k, h in enumerate(ineqs):
        hv = [dot(h, l) for l in lines]
        pivot = next((i for i, v in enumerate(hv) if v != 0), None)
        if pivot is not None:
            l0 = lines.pop(pivot)
            c0 = hv[pivot]
            if c0 < 0:
                l0, c0 = tuple(-x for x in l0), -c0
            lines = [tuple(a - dot(h, l) / c0 * b for a, b in zip(l, l0)) for l in lines]
            rays = [tuple(a - dot(h, r) / c0 * b for a, b in zip(r, l0)) for r in rays]
            tight = [t | {k} for t in tight]
            rays.append(l0)
            tight.append(set(range(k)))
            continue
        values = [dot(h, r) for r in rays]
        pos = [i for i, v in enumerate(values) if v > 0]
        neg = [i for i, v in enumerate(values) if v < 0]
        zero = [i for i, v in enumerate(values) if v == 0]
        new_rays = [rays[i] for i in pos + zero]
        new_tight = [tight[i] for i in pos] + [tight[i] | {k} for i in zero]
        for p in pos:
            for n in neg:
                common = tight[p] & tight[n]
                if any(common <= tight[o] for o in range(len(rays)) if o != p and o != n):
                    continue
                vp, vn = values[p], values[n]
                ray = tuple(vp * b - vn * a for a, b in zip(rays[p], rays[n]))
                new_rays.append(ray)
                new_tight.append(common | {k})
        rays, tight = new_rays, new_tight
    out = []
    for r in rays:
        pr = primitive_vector(r)
        if any(pr) and pr not in out:
            out.append(pr)
    return sorted(out), [primitive_vector(l) for l in lines]


def intersect(cones):
    """Intersection of cones sharing an ambient space, returned as a Cone."""
    cones = list(cones)
    dim = cones[0].ambient_dim
    equations, inequalities = [], []
    for c in cones:
        eq, ineq = halfspace_representation(c)
        equations.extend(eq)
        inequalities.extend(ineq)
    inequalities = sorted(set(inequalities))
    rays, lines = cone_from_inequalities(dim, equations, inequalities)
    gens = list(rays) + list(lines) + [tuple(-x for x in l) for l in lines]
    return Cone(dim, tuple(gens))


def separating_hyperplane(c1, c2):
    """w with c1 ⊂ H_w^+, c2 ⊂ H_w^- and H_w ∩ c1 = H_w ∩ c2 = c1 ∩ c2, or None."""
    dim = c1.ambient_dim
    common = intersect([c1, c2])
    lp = LinearProgram()
    w = lp.variables(dim, free=True)
    for x in common.generators:
        lp.constrain({wi: v for wi, v in zip(w, x)}, "==", 0)
    for g in c1.generators:
        lp.constrain({wi: v for wi, v in zip(w, g)}, ">=", 0 if contains(common, g) else 1)
    for h in c2.generators:
        lp.constrain({wi: v for wi, v in zip(w, h)}, "<=", 0 if contains(common, h) else -1)
    res = lp.feasible_point()
    if res.status != OPTIMAL:
        return None
    return primitive_vector([res.values[i] for i in w])
