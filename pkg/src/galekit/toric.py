"""Lattice computations for toric data: spanned lattices, nonsingularity,
stabiliser orders, Cartier divisors, class groups, nef and ample cones."""

from dataclasses import dataclass
from math import prod

from .cones import Cone, intersect, relint_contains, halfspace_representation, FACET_DIM_LIMIT
from .errors import (GalekitError, NOT_INTEGRAL, NOT_A_FAN, NOT_COMPLETE, DIM_LIMIT, INFINITE,
                     BAD_INPUT, GALE_MISMATCH)
from .fans import FanData, validate, is_complete, is_polytopal, _dual_of
from .gale import VectorConfiguration
from .linalg import Matrix, inverse, vectors_rank
from .rational import to_rat
from .snf import smith_normal_form, elementary_divisors, integer_solution

DEFAULT_MAX_MULTIPLE = 12


def _integer_matrix(cfg):
    if not cfg.is_integral():
        raise GalekitError(NOT_INTEGRAL, "lattice computations need integer vectors")
    return Matrix.from_columns([[int(x) for x in c] for c in cfg.columns], nrows=cfg.dim,
                               integral=True)


@dataclass(frozen=True)
class LatticeData:
    """A with a lattice N containing its vectors.

    ``n_basis`` has the basis of N as columns, ``m_basis`` the dual basis of M,
    and ``coords`` the N-coordinates of the vectors of A (an integer n×m matrix).
    """

    config: VectorConfiguration
    n_basis: Matrix
    m_basis: Matrix
    coords: Matrix

    @property
    def m(self):
        return self.config.m

    @property
    def n(self):
        return self.config.dim


def lattice_span(config, overlattice=None):
    """LatticeData for N = Z<A>, or for a supplied overlattice basis (columns)."""
    a = _integer_matrix(config)
    n = config.dim
    if not config.spans():
        raise GalekitError(BAD_INPUT, "A does not span")
    if overlattice is None:
        u, s, _ = smith_normal_form(a)
        diag = [[int(i == j) * s.entries[i][i] for j in range(n)] for i in range(n)]
        basis = inverse(u) @ Matrix.from_rows(diag, ncols=n)
    else:
        basis = Matrix.from_rows(overlattice, ncols=n)
        if not basis.is_integral() or vectors_rank(basis.columns(), n) != n:
            raise GalekitError(BAD_INPUT, "overlattice basis must be integral of full rank")
    coords = inverse(basis) @ a
    if not coords.is_integral():
        raise GalekitError(BAD_INPUT, "some vector of A lies outside the lattice N")
    return LatticeData(config, basis.to_integer(), inverse(basis).transpose(), coords.to_integer())


def _coords_of(ld, indices):
    cols = [ld.coords.column(i - 1) for i in sorted(indices)]
    return Matrix.from_columns(cols, nrows=ld.n, integral=True)


def _unimodular_columns(columns, dim):
    """Integer columns extend to a lattice basis of Z^dim."""
    if not columns:
        return True
    if vectors_rank(columns, dim) != len(columns):
        return False
    divisors = elementary_divisors(Matrix.from_columns(columns, nrows=dim, integral=True))
    return all(d == 1 for d in divisors)


def is_part_of_basis(ld, indices, gamma=None):
    """A_I is part of a basis of N.  With the integer dual ``gamma`` also checks
    that Γ_Î generates the dual lattice and asserts agreement."""
    cols = [ld.coords.column(i - 1) for i in sorted(indices)]
    verdict = _unimodular_columns(cols, ld.n)
    if gamma is not None:
        dual = lattice_generates(gamma, gamma.select_complement(indices))
        if dual != verdict:
            raise GalekitError(GALE_MISMATCH, f"basis part {verdict} vs dual lattice span {dual}")
    return verdict


def lattice_generates(gamma, columns):
    """The columns generate Z^k (k = dim of gamma)."""
    k = gamma.dim
    if k == 0:
        return True
    if vectors_rank(columns, k) != k:
        return False
    return all(d == 1 for d in elementary_divisors(
        Matrix.from_columns([[int(x) for x in c] for c in columns], nrows=k, integral=True)))


def integer_gale_dual(ld):
    """Γ whose rows are a basis of the lattice of integer relations among A.

    Its columns generate Z^(m-n), so Γ_Î spanning the lattice is meaningful.
    """
    _, _, v = smith_normal_form(ld.coords)
    rows = [[v.entries[i][j] for i in range(ld.m)] for j in range(ld.n, ld.m)]
    return VectorConfiguration.from_rows(rows, m=ld.m)


def stabilizer_order(gamma, indices):
    """|L_I / L|: the finite stabiliser of a point whose zero coordinates are I."""
    if gamma.dim:
        _integer_matrix(gamma)
    cols = gamma.select_complement(indices)
    k = gamma.dim
    if vectors_rank(cols, k) != k:
        raise GalekitError(INFINITE, "Γ_Î does not span, stabiliser has positive dimension")
    if k == 0:
        return 1
    sub = prod(elementary_divisors(Matrix.from_columns(cols, nrows=k).to_integer()))
    full = prod(elementary_divisors(Matrix.from_columns(gamma.columns, nrows=k).to_integer()))
    return sub // full


# ---------------------------------------------------------------- fans over N

def as_fan_data(collection, config):
    if isinstance(collection, FanData):
        return collection
    return FanData(collection, config)


def _checked_fan(collection, config):
    fd = validate(as_fan_data(collection, config))
    if not fd.validated.is_fan:
        raise GalekitError(NOT_A_FAN, fd.validated.reason)
    return fd


def is_nonsingular(fd, ld):
    fd = _checked_fan(fd, ld.config)
    if not fd.simplicial:
        raise GalekitError(BAD_INPUT, "nonsingularity is defined for simplicial fan data")
    return all(is_part_of_basis(ld, f) for f in fd.collection.facets)


def is_cartier(collection, config, ld, b):
    """Σ b_i D_i is Cartier: on each maximal cone it agrees with a character of M."""
    fd = _checked_fan(collection, config)
    b = _integral_vector(b, ld.m)
    for cone_set in fd.maximal_members():
        if not cone_set:
            continue
        c_t = _coords_of(ld, cone_set).transpose()
        if integer_solution(c_t, [-b[i - 1] for i in sorted(cone_set)]) is None:
            return False
    return True


def _integral_vector(b, m):
    b = list(b)
    if len(b) != m:
        raise GalekitError(BAD_INPUT, "divisor vector length differs from m")
    vals = [to_rat(x) for x in b]
    if any(x.denominator != 1 for x in vals):
        raise GalekitError(NOT_INTEGRAL, "divisor coefficients must be integers")
    return [int(x) for x in vals]


def cartier_multiple(collection, config, ld, b, max_multiple=DEFAULT_MAX_MULTIPLE):
    """Smallest j <= max_multiple with j·b Cartier, or None."""
    fd = _checked_fan(collection, config)
    b = _integral_vector(b, ld.m)
    for j in range(1, max_multiple + 1):
        if is_cartier(fd, config, ld, [j * x for x in b]):
            return j
    return None


def class_group(config, ld=None):
    """(free rank, torsion invariant factors) of Z^m / A*(M)."""
    ld = lattice_span(config) if ld is None else ld
    divisors = elementary_divisors(ld.coords.transpose())
    return ld.m - ld.n, [d for d in divisors if d > 1]


def _complete_fan(collection, config, gamma):
    fd = _checked_fan(collection, config)
    if not is_complete(fd):
        raise GalekitError(NOT_COMPLETE, "fan is not complete")
    return fd, _dual_of(config, gamma)


def nef_cone(collection, config, gamma=None):
    """∩ cone Γ_Î over maximal cones I of a complete fan."""
    fd, gamma = _complete_fan(collection, config, gamma)
    if gamma.dim > FACET_DIM_LIMIT:
        raise GalekitError(DIM_LIMIT, f"m - n = {gamma.dim} > {FACET_DIM_LIMIT}")
    cones = [Cone(gamma.dim, tuple(gamma.select_complement(s))) for s in fd.maximal_members()]
    return intersect(cones)


def nef_cone_hrep(cone):
    return halfspace_representation(cone)


def ample_contains(collection, config, delta, gamma=None):
    fd, gamma = _complete_fan(collection, config, gamma)
    return all(relint_contains(Cone(gamma.dim, tuple(gamma.select_complement(s))), delta)
               for s in fd.maximal_members())


def is_projective(collection, config, gamma=None):
    """Projectivity via polytopality; the certificate is re-checked as an ample class."""
    fd, gamma = _complete_fan(collection, config, gamma)
    delta = is_polytopal(fd, gamma)
    if delta is None:
        return False
    if not ample_contains(fd, config, delta, gamma):
        raise GalekitError(GALE_MISMATCH, "polytopal certificate is not ample")
    return True


__all__ = [
    "LatticeData", "lattice_span", "is_part_of_basis", "lattice_generates", "integer_gale_dual",
    "stabilizer_order", "is_nonsingular", "is_cartier", "cartier_multiple", "class_group",
    "nef_cone", "nef_cone_hrep", "ample_contains", "is_projective",
]
