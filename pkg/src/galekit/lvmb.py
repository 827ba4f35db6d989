"""LVMB data (E, Γ'): validation, the associated fan data and LVM detection."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .complexes import SimplicialComplex
from .cones import Cone, contains, relints_intersect, relint_contains
from .errors import (GalekitError, GALE_MISMATCH, DEPENDENT_SIMPLEX, NOT_PURE, NOT_LVMB,
                     NOT_SPANNING, BAD_INPUT)
from .fans import FanData, validate, is_complete, is_polytopal, substitute_existence
from .gale import PointConfiguration, gale_dual, vector_from_affine
from .linalg import vectors_rank
from .sets import complement, sorted_sets


@dataclass(frozen=True)
class LVMBDatum:
    m: int
    k: int
    E: frozenset
    points: PointConfiguration

    def __post_init__(self):
        fam = frozenset(frozenset(int(i) for i in J) for J in self.E)
        object.__setattr__(self, "E", fam)
        if not fam:
            raise GalekitError(BAD_INPUT, "E must be nonempty")
        if any(len(J) != self.k or not J <= frozenset(range(1, self.m + 1)) for J in fam):
            raise GalekitError(BAD_INPUT, f"members of E must be {self.k}-subsets of [{self.m}]")
        if self.points.m != self.m or self.points.dim != self.k - 1:
            raise GalekitError(BAD_INPUT, f"expected {self.m} points in dimension {self.k - 1}")

    @property
    def gamma(self):
        """Homogenised configuration: each point with an appended coordinate 1."""
        return vector_from_affine(self.points)

    def ordered_E(self):
        return [frozenset(t) for t in sorted_sets(self.E)]


@dataclass(frozen=True)
class LVMBReport:
    minimal_gen: bool
    imbrication: bool
    substitute_existence: bool

    @property
    def is_lvmb(self):
        return self.minimal_gen and self.imbrication and self.substitute_existence


def _minimal_generating(gamma, J):
    return len(J) == gamma.dim and vectors_rank(gamma.select(J), gamma.dim) == gamma.dim


def validate_lvmb(datum):
    gamma = datum.gamma
    family = datum.ordered_E()
    minimal = all(_minimal_generating(gamma, J) for J in family)
    imbricated = all(
        relints_intersect(Cone(gamma.dim, tuple(gamma.select(J1))),
                          Cone(gamma.dim, tuple(gamma.select(J2)))) is not None
        for J1, J2 in combinations(family, 2))
    return LVMBReport(minimal, imbricated, substitute_existence(datum.E, datum.m))


def complex_from_E(E, m):
    return SimplicialComplex(m, tuple(complement(J, m) for J in E))


def E_from_complex(complex_):
    if not complex_.is_pure():
        raise GalekitError(NOT_PURE, "complex is not pure")
    return frozenset(complement(f, complex_.m) for f in complex_.facets)


def indispensable(E):
    E = [frozenset(J) for J in E]
    if not E:
        return frozenset()
    out = E[0]
    for J in E[1:]:
        out &= J
    return out


def fan_data_of(datum):
    """{K, A}: K from E and A a Gale dual of the homogenised points."""
    gamma = datum.gamma
    return FanData(complex_from_E(datum.E, datum.m), gale_dual(gamma)), gamma


def _fan_side(datum):
    try:
        fd, gamma = fan_data_of(datum)
        fd = validate(fd, gamma)
    except GalekitError as exc:
        if exc.code in (DEPENDENT_SIMPLEX, NOT_SPANNING):
            return False
        raise
    return fd.validated.is_fan and is_complete(fd, gamma)


def lvmb_fan_crosscheck(datum):
    """LVMB verdict, computed on the point side and on the fan side; they must agree."""
    point_side = validate_lvmb(datum).is_lvmb
    fan_side = _fan_side(datum)
    if point_side != fan_side:
        raise GalekitError(GALE_MISMATCH, f"LVMB conditions {point_side} vs complete fan {fan_side}")
    return point_side


def lvm_family(points, origin=None):
    """{J : |J| = dim + 1, Γ'_J affinely independent, origin in conv Γ'_J}."""
    origin = tuple(Fraction(0) for _ in range(points.dim)) if origin is None else origin
    shifted = PointConfiguration(points.dim, tuple(
        tuple(x - o for x, o in zip(p, origin)) for p in points.points))
    gamma = vector_from_affine(shifted)
    target = tuple(Fraction(int(i == gamma.dim - 1)) for i in range(gamma.dim))
    family = set()
    for J in combinations(range(1, points.m + 1), gamma.dim):
        cols = tuple(gamma.select(J))
        if vectors_rank(cols, gamma.dim) != gamma.dim:
            continue
        if contains(Cone(gamma.dim, cols), target):
            family.add(frozenset(J))
    return frozenset(family)


@dataclass(frozen=True)
class LVMCertificate:
    is_lvm: bool
    origin_presentation: bool
    shift: tuple = None


def lvm_certificate(datum):
    """LVM verdict from polytopality, with the shift that presents E as an LVM family.

    A polytopal δ = (δ', t) gives the point δ'/t; moving it to the origin turns
    E into exactly the family of simplices around the origin.
    """
    if not validate_lvmb(datum).is_lvmb:
        raise GalekitError(NOT_LVMB, "datum is not LVMB")
    fd, gamma = fan_data_of(datum)
    origin_ok = lvm_family(datum.points) == datum.E
    delta = is_polytopal(fd, gamma)
    if delta is None:
        if origin_ok:
            raise GalekitError(GALE_MISMATCH, "origin presentation without a polytopal δ")
        return LVMCertificate(False, False)
    scale = delta[-1]
    shift = tuple(Fraction(x) / scale for x in delta[:-1])
    if lvm_family(datum.points, shift) != datum.E:
        raise GalekitError(GALE_MISMATCH, "shifted point set does not reproduce E")
    if not relint_contains(Cone(gamma.dim, gamma.columns), delta):
        raise GalekitError(GALE_MISMATCH, "polytopal δ outside the interior of cone Γ")
    return LVMCertificate(True, origin_ok, shift)


def is_lvm(datum):
    return lvm_certificate(datum).is_lvm
