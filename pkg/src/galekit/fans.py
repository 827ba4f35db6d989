"""Fan data: validation through both Gale-dual criteria, completeness,
normal fans, polytopality and GKZ chambers."""

from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations

from .complexes import SimplicialComplex
from .cones import (Cone, relints_intersect, relint_contains, contains, is_strongly_convex,
                    is_face, intersect, halfspace_representation)
from .errors import (GalekitError, GALE_MISMATCH, DEPENDENT_SIMPLEX, NOT_A_FAN, NOT_FULL_DIM,
                     SIZE_LIMIT, DELTA_NOT_INTERIOR, DELTA_OUTSIDE, NOT_GENERIC, BAD_INPUT)
from .gale import VectorConfiguration, gale_dual, is_gale_pair
from .linalg import Matrix, vectors_rank, solve
from .lp import LinearProgram, OPTIMAL
from .rational import to_rat, primitive_vector
from .sets import complement, sorted_sets

SUBSET_LIMIT = 16


@dataclass(frozen=True)
class FanVerdict:
    """Outcome of fan validation; a failing verdict names the offending pair."""

    is_fan: bool
    pair: tuple = None
    witness: tuple = None
    reason: str = ""

    def __bool__(self):
        return self.is_fan


@dataclass(frozen=True)
class FanData:
    """A collection of index sets together with the configuration A.

    ``collection`` is a SimplicialComplex (simplicial flavour) or a frozenset
    of frozensets (general flavour).  ``validated`` caches a verdict.
    """

    collection: object
    config: VectorConfiguration
    validated: FanVerdict = None

    def __post_init__(self):
        if not isinstance(self.collection, SimplicialComplex):
            fam = frozenset(frozenset(int(i) for i in s) for s in self.collection)
            object.__setattr__(self, "collection", fam)
        if self.m != self.config.m:
            raise GalekitError(BAD_INPUT, f"collection on [{self.m}] but {self.config.m} vectors")

    @property
    def simplicial(self):
        return isinstance(self.collection, SimplicialComplex)

    @property
    def m(self):
        if self.simplicial:
            return self.collection.m
        return self.config.m

    @property
    def n(self):
        return self.config.dim

    def members(self):
        if self.simplicial:
            return self.collection.faces()
        return [frozenset(t) for t in sorted_sets(self.collection)]

    def maximal_members(self):
        if self.simplicial:
            return list(self.collection.facets)
        fam = self.members()
        return [s for s in fam if not any(s < t for t in fam)]

    def cone(self, indices):
        return Cone(self.config.dim, tuple(self.config.select(indices)))


def _dual_of(config, gamma):
    if gamma is None:
        return gale_dual(config)
    if not is_gale_pair(gamma, config):
        raise GalekitError(GALE_MISMATCH, "supplied Γ is not Gale dual to A")
    return gamma


def _dual_cone(gamma, indices):
    return Cone(gamma.dim, tuple(gamma.select_complement(indices)))


# ---------------------------------------------------------------- complexes

def universal_complex(gamma):
    """K(Γ): all I whose complementary columns of Γ span."""
    if not gamma.spans():
        raise GalekitError("NOT_SPANNING", "Γ does not span")
    good = _grow(gamma.m, lambda s: vectors_rank(gamma.select_complement(s), gamma.dim) == gamma.dim)
    return SimplicialComplex(gamma.m, tuple(good))


def stabilizer_dim(gamma, indices):
    return gamma.dim - vectors_rank(gamma.select_complement(indices), gamma.dim)


def _grow(m, accept):
    """All accepted subsets of [m] for a downward-closed predicate.

    Each set is reached once, from itself minus its largest element.
    """
    found = []
    frontier = [frozenset()] if accept(frozenset()) else []
    while frontier:
        found.extend(frontier)
        nxt = []
        for s in frontier:
            top = max(s) if s else 0
            for j in range(top + 1, m + 1):
                t = s | {j}
                if accept(t):
                    nxt.append(t)
        frontier = nxt
    return found


# ---------------------------------------------------------------- validation

def _a_side_overlap(config, members):
    """First pair I != J whose cone relints meet, with the witness, or None."""
    for i, j in combinations(members, 2):
        union = i | j
        if vectors_rank(config.select(union), config.dim) == len(union):
            continue  # independent union admits only the trivial relation
        w = relints_intersect(Cone(config.dim, tuple(config.select(i))),
                              Cone(config.dim, tuple(config.select(j))))
        if w is not None:
            return i, j, w
    return None


def _gamma_side_gap(gamma, pairs):
    """First pair whose dual-cone relints are disjoint, or None."""
    for i, j in pairs:
        if i == j:
            continue
        common = gamma.select_complement(i | j)
        if vectors_rank(common, gamma.dim) == gamma.dim:
            continue  # a full-dimensional common subcone puts interior points in both
        if relints_intersect(_dual_cone(gamma, i), _dual_cone(gamma, j)) is None:
            return i, j
    return None


def is_fan_data(fd, gamma=None):
    """Decide the fan condition for simplicial fan data by both Gale-dual criteria.

    The A-side checks that relints of cone A_I, cone A_J are disjoint for all
    distinct faces; the Γ-side checks that the relints of cone Γ_Î, cone Γ_Ĵ
    meet.  Both sides run over all pairs of faces.
    """
    if not fd.simplicial:
        return is_fan_data_general(fd.collection, fd.config, gamma)
    config = fd.config
    faces = fd.members()
    for face in faces:
        if vectors_rank(config.select(face), config.dim) != len(face):
            raise GalekitError(DEPENDENT_SIMPLEX, f"A_I dependent for I = {sorted(face)}")
    gamma = _dual_of(config, gamma)
    overlap = _a_side_overlap(config, faces)
    gap = _gamma_side_gap(gamma, combinations(faces, 2))
    _assert_agree(overlap, gap)
    if overlap is None:
        return FanVerdict(True)
    i, j, w = overlap
    return FanVerdict(False, (i, j), w, "relative interiors overlap")


def _assert_agree(overlap, gap):
    if (overlap is None) != (gap is None):
        raise GalekitError(GALE_MISMATCH,
                           f"A-side overlap {overlap and sorted(map(sorted, overlap[:2]))} "
                           f"vs Γ-side gap {gap and [sorted(g) for g in gap]}")


def _saturation(config, cone_sub, s):
    return frozenset(i for i in s if contains(cone_sub, config.columns[i - 1]))


def face_closure(generating_sets, config):
    """Each set together with, for every face of its cone, the indices on that face."""
    out = {frozenset()}
    for s in generating_sets:
        s = frozenset(s)
        cone_s = Cone(config.dim, tuple(config.select(s)))
        for size in range(len(s) + 1):
            for sub in combinations(sorted(s), size):
                sub = frozenset(sub)
                cone_sub = Cone(config.dim, tuple(config.select(sub)))
                if is_face(cone_sub, cone_s):
                    out.add(_saturation(config, cone_sub, s))
    return frozenset(out)


def is_fan_data_general(collection, config, gamma=None):
    """Fan test for an arbitrary family C: strong convexity, A-closedness, overlaps."""
    family = [frozenset(t) for t in sorted_sets(frozenset(frozenset(s) for s in collection))]
    fam_set = set(family)
    if frozenset() not in fam_set:
        return FanVerdict(False, (frozenset(), frozenset()), None, "empty set missing")
    for s in family:
        if not is_strongly_convex(Cone(config.dim, tuple(config.select(s)))):
            return FanVerdict(False, (s, s), None, "cone not strongly convex")
    for s in family:
        cone_s = Cone(config.dim, tuple(config.select(s)))
        for size in range(len(s)):
            for sub in combinations(sorted(s), size):
                sub = frozenset(sub)
                if sub in fam_set:
                    continue
                cone_sub = Cone(config.dim, tuple(config.select(sub)))
                if not is_face(cone_sub, cone_s):
                    continue
                # the face is represented by all generators of s lying on it
                if _saturation(config, cone_sub, s) not in fam_set:
                    return FanVerdict(False, (s, sub), None, "face missing from collection")
    gamma = _dual_of(config, gamma)
    overlap = _a_side_overlap(config, family)
    gap = _gamma_side_gap(gamma, combinations(family, 2))
    _assert_agree(overlap, gap)
    if overlap is None:
        return FanVerdict(True)
    i, j, w = overlap
    return FanVerdict(False, (i, j), w, "relative interiors overlap")


def validate(fd, gamma=None):
    """FanData carrying its verdict (validation is skipped if already known)."""
    if fd.validated is not None:
        return fd
    return replace(fd, validated=is_fan_data(fd, gamma))


def _require_fan(fd, gamma=None):
    fd = validate(fd, gamma)
    if not fd.validated.is_fan:
        raise GalekitError(NOT_A_FAN, fd.validated.reason)
    return fd


# ---------------------------------------------------------------- completeness

def ridge_criterion(faces, n):
    """Some n-face exists and every (n-1)-face lies in exactly two n-faces."""
    faces = [frozenset(f) for f in faces]
    tops = [f for f in faces if len(f) == n]
    if not tops:
        return False
    for ridge in (f for f in faces if len(f) == n - 1):
        if sum(1 for t in tops if ridge <= t) != 2:
            return False
    return True


def substitute_existence(family, m):
    """Nonempty, and every J admits a swap (J - j) + i inside the family for each i."""
    family = {frozenset(j) for j in family}
    if not family:
        return False
    for J in family:
        for i in range(1, m + 1):
            if i in J:
                continue
            if not any((J - {j}) | {i} in family for j in J):
                return False
    return True


def substitute_family(complex_, n):
    m = complex_.m
    return {complement(f, m) for f in complex_.faces_of_size(n)}


def is_complete(fd, gamma=None):
    """Completeness of a fan; for simplicial data both the ridge and the
    substitute-existence criteria are evaluated and must agree."""
    fd = _require_fan(fd, gamma)
    n = fd.n
    if fd.simplicial:
        ridge = ridge_criterion(fd.collection.faces(), n)
        swap = substitute_existence(substitute_family(fd.collection, n), fd.m)
        if ridge != swap:
            raise GalekitError(GALE_MISMATCH, f"ridge criterion {ridge} vs substitute existence {swap}")
        return ridge
    return _general_ridge_criterion(fd)


def _general_ridge_criterion(fd):
    members = fd.members()
    dims = {s: vectors_rank(fd.config.select(s), fd.n) for s in members}
    tops = [s for s in members if dims[s] == fd.n]
    if not tops:
        return False
    for ridge in (s for s in members if dims[s] == fd.n - 1):
        if sum(1 for t in tops if ridge <= t) != 2:
            return False
    return True


def add_ghost_vertex(fd, a_new):
    if not fd.simplicial:
        raise GalekitError(BAD_INPUT, "ghost vertices are added to simplicial fan data")
    return FanData(fd.collection.with_ground_set(fd.m + 1), fd.config.extended(a_new))


# ---------------------------------------------------------------- polyhedra

@dataclass(frozen=True)
class Polyhedron:
    """{w : <a_i, w> + b_i >= 0 for all i}."""

    config: VectorConfiguration
    b: tuple

    def __post_init__(self):
        b = tuple(to_rat(x) for x in self.b)
        if len(b) != self.config.m:
            raise GalekitError(BAD_INPUT, "offset vector length differs from m")
        object.__setattr__(self, "b", b)
        if _interior_level(self) is None:
            raise GalekitError(BAD_INPUT, "polyhedron is empty")

    def slack(self, w):
        return tuple(sum((a * x for a, x in zip(col, w)), Fraction(0)) + bi
                     for col, bi in zip(self.config.columns, self.b))

    def contains(self, w):
        return all(y >= 0 for y in self.slack(w))


def _interior_level(poly):
    """max s with <a_i, w> + b_i >= s, s <= 1; None if the polyhedron is empty."""
    lp = LinearProgram()
    w = lp.variables(poly.config.dim, free=True)
    s = lp.variable(free=True)
    for col, bi in zip(poly.config.columns, poly.b):
        coeffs = {wi: x for wi, x in zip(w, col)}
        coeffs[s] = -1
        lp.constrain(coeffs, ">=", -bi)
    lp.constrain({s: 1}, "<=", 1)
    res = lp.maximize({s: 1})
    if res.status != OPTIMAL or res.objective < 0:
        return None
    return res.objective, tuple(res.values[i] for i in w)


def interior_point(poly):
    level = _interior_level(poly)
    if level is None or level[0] <= 0:
        return None
    return level[1]


def delta_of(poly, gamma=None):
    gamma = _dual_of(poly.config, gamma)
    if gamma.dim == 0:
        return gamma, ()
    return gamma, tuple(Matrix.from_columns(gamma.columns, nrows=gamma.dim) @ poly.b)


def _relint_family(gamma, delta):
    """({I : δ ∈ cone Γ_Î}, {I : δ ∈ relint cone Γ_Î}), enumerated upward."""
    if gamma.m > SUBSET_LIMIT:
        raise GalekitError(SIZE_LIMIT, f"m = {gamma.m} > {SUBSET_LIMIT}")
    closed = _grow(gamma.m, lambda s: contains(_dual_cone(gamma, s), delta))
    open_ = [s for s in closed if relint_contains(_dual_cone(gamma, s), delta)]
    return closed, open_


def normal_fan(poly, gamma=None):
    """(FanData, generic) for a full-dimensional polyhedron."""
    if poly.config.m > SUBSET_LIMIT:
        raise GalekitError(SIZE_LIMIT, f"m = {poly.config.m} > {SUBSET_LIMIT}")
    if interior_point(poly) is None:
        raise GalekitError(NOT_FULL_DIM, "polyhedron has empty interior")
    gamma, delta = delta_of(poly, gamma)
    _, members = _relint_family(gamma, delta)
    config = poly.config
    generic = all(vectors_rank(config.select(s), config.dim) == len(s) for s in members)
    if generic:
        cx = SimplicialComplex(config.m, tuple(members))
        if set(cx.faces()) != set(members):
            raise GalekitError(GALE_MISMATCH, "generic normal fan is not downward closed")
        return FanData(cx, config), True
    return FanData(frozenset(members), config), False


def dual_complex(poly, gamma=None):
    fd, generic = normal_fan(poly, gamma)
    if not generic:
        raise GalekitError(NOT_GENERIC, "normal fan is not simplicial")
    return fd.collection


def is_polytopal(fd, gamma=None):
    """Some δ in the relative interior of every cone Γ_Î, I in the fan, or None.

    One joint LP: δ = Σ_{j ∉ I} λ_{I,j} γ_j for each I, all λ >= s, s <= 1,
    maximise s.
    """
    fd = _require_fan(fd, gamma)
    gamma = _dual_of(fd.config, gamma)
    delta = _joint_relint_point(gamma, fd.members())
    if delta is None:
        return None
    for s in fd.members():
        if not relint_contains(_dual_cone(gamma, s), delta):
            raise GalekitError(GALE_MISMATCH, f"δ certificate fails on {sorted(s)}")
    return delta


def _joint_relint_point(gamma, members):
    k = gamma.dim
    lp = LinearProgram()
    delta = lp.variables(k, free=True)
    level = lp.variable()
    for s in members:
        cols = gamma.select_complement(s)
        lam = lp.variables(len(cols))
        for r in range(k):
            coeffs = {v: c[r] for v, c in zip(lam, cols)}
            coeffs[level] = sum((c[r] for c in cols), Fraction(0))
            coeffs[delta[r]] = -1
            lp.constrain(coeffs, "==", 0)
    lp.constrain({level: 1}, "<=", 1)
    res = lp.maximize({level: 1})
    if res.status != OPTIMAL or res.objective <= 0:
        return None
    return primitive_vector([res.values[v] for v in delta])


def polyhedron_from_delta(gamma, config, delta):
    delta = tuple(to_rat(x) for x in delta)
    if not relint_contains(Cone(gamma.dim, gamma.columns), delta):
        raise GalekitError(DELTA_NOT_INTERIOR, "δ is not in the interior of cone Γ")
    b = solve(Matrix.from_columns(gamma.columns, nrows=gamma.dim), delta)
    return Polyhedron(config, b)


# ---------------------------------------------------------------- GKZ chambers

@dataclass(frozen=True)
class Chamber:
    cone: Cone
    equations: tuple
    inequalities: tuple
    supports: tuple  # the sets S with δ in relint cone Γ_S


def chamber_supports(gamma, delta):
    delta = tuple(to_rat(x) for x in delta)
    if not contains(Cone(gamma.dim, gamma.columns), delta):
        raise GalekitError(DELTA_OUTSIDE, "δ is outside cone Γ")
    _, members = _relint_family(gamma, delta)
    return frozenset(complement(s, gamma.m) for s in members)


def gkz_chamber(gamma, delta):
    """C(δ): intersection of the cones Γ_S whose relative interior holds δ."""
    delta = tuple(to_rat(x) for x in delta)
    supports = chamber_supports(gamma, delta)
    cones = [Cone(gamma.dim, tuple(gamma.select(s))) for s in supports]
    chamber = intersect(cones)
    eqs, ineqs = halfspace_representation(chamber)
    if not relint_contains(chamber, delta):
        raise GalekitError(GALE_MISMATCH, "δ not in the relative interior of its chamber")
    ordered = tuple(frozenset(t) for t in sorted_sets(supports))
    return Chamber(chamber, tuple(eqs), tuple(ineqs), ordered)


def same_chamber(gamma, delta1, delta2):
    return chamber_supports(gamma, delta1) == chamber_supports(gamma, delta2)
