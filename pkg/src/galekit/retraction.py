"""Floating-point retraction of points of U(K) onto R_K and Z_K along V-orbits.

A point x with zero set Z is moved by v in V (x_i -> e^{<γ_i, v>} x_i) so that
|x_i| = 1 off a maximal face I ⊇ Z and |x_i| <= 1 on I.  The face is found by
locating -ℓ(x) in the fan modulo the directions a_j, j in Z, which is the
link recursion carried out in one step.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (GalekitError, NOT_COMPLETE, POINT_NOT_IN_UK, LOCATION_AMBIGUOUS,
                     ZERO_COORDINATE, BAD_INPUT)
from .fans import _require_fan, _dual_of, is_complete
from .linalg import solve, Matrix

ZERO_TOL = 1e-12
LOCATE_TOL = 1e-12


@dataclass(frozen=True)
class MomentAnglePoint:
    """``phases`` are the input's signs (real) or arguments (complex), copied
    verbatim; ``coords`` recombine them with the new moduli in floating point."""

    coords: tuple
    zero_set: frozenset
    face: frozenset
    phases: tuple = ()


def _as_float_matrix(cfg):
    return np.array([[float(x) for x in col] for col in cfg.columns], dtype=float).T.reshape(
        cfg.dim, cfg.m)


def ell(config, x):
    """ℓ(x) = Σ a_i log|x_i|."""
    moduli = np.abs(np.asarray(x))
    if moduli.shape != (config.m,):
        raise GalekitError(BAD_INPUT, f"point has {moduli.size} coordinates, expected {config.m}")
    if np.any(moduli <= ZERO_TOL):
        raise GalekitError(ZERO_COORDINATE, "ℓ is defined away from the coordinate hyperplanes")
    return _as_float_matrix(config) @ np.log(moduli)


class Retraction:
    """Precomputed data for retracting many points onto one complete simplicial fan."""

    def __init__(self, fd, gamma=None):
        fd = _require_fan(fd, gamma)
        if not fd.simplicial:
            raise GalekitError(BAD_INPUT, "retraction needs simplicial fan data")
        if not is_complete(fd):
            raise GalekitError(NOT_COMPLETE, "retraction needs a complete fan")
        self.fd = fd
        self.gamma = _dual_of(fd.config, gamma)
        self.a = _as_float_matrix(fd.config)
        self.g = _as_float_matrix(self.gamma)
        self.facets = list(fd.collection.facets)

    # -- point location

    def _candidates(self, zero_set):
        return [f for f in self.facets if zero_set <= f]

    def _coefficients(self, face, target):
        cols = sorted(face)
        sol, *_ = np.linalg.lstsq(self.a[:, [i - 1 for i in cols]], target, rcond=None)
        return dict(zip(cols, sol))

    def _locate(self, zero_set, target):
        best = None
        for face in self._candidates(zero_set):
            coef = self._coefficients(face, target)
            signed = [coef[i] for i in face if i not in zero_set]
            score = min(signed) if signed else 0.0
            if best is None or score > best[0]:
                best = (score, face, coef)
        if best is None:
            raise GalekitError(POINT_NOT_IN_UK, "zero set is not a face")
        score, face, coef = best
        if score >= -LOCATE_TOL * (1 + float(np.max(np.abs(target), initial=0.0))):
            return face, coef
        return self._locate_exact(zero_set, target)

    def _locate_exact(self, zero_set, target):
        """Re-run location on the exact binary value of the float target."""
        exact = [Fraction(float(t)) for t in target]
        for face in self._candidates(zero_set):
            cols = sorted(face)
            sub = Matrix.from_columns(self.fd.config.select(cols), nrows=self.fd.n)
            sol = solve(sub, exact)
            if sol is None:
                continue
            coef = dict(zip(cols, sol))
            if all(coef[i] >= 0 for i in face if i not in zero_set):
                return face, {i: float(c) for i, c in coef.items()}
        raise GalekitError(LOCATION_AMBIGUOUS, "no cone of the fan contains the point")

    # -- retraction

    def _retract(self, moduli):
        m = self.fd.m
        if moduli.shape != (m,):
            raise GalekitError(BAD_INPUT, f"point has {moduli.size} coordinates, expected {m}")
        zero_set = frozenset(i + 1 for i in range(m) if moduli[i] <= ZERO_TOL)
        if zero_set not in self.fd.collection:
            raise GalekitError(POINT_NOT_IN_UK, f"zero set {sorted(zero_set)} is not a face")
        logs = np.zeros(m)
        live = [i for i in range(m) if i + 1 not in zero_set]
        logs[live] = np.log(moduli[live])
        target = -(self.a @ logs)
        face, coef = self._locate(zero_set, target)
        off = [i - 1 for i in range(1, m + 1) if i not in face]
        if self.gamma.dim:
            v = np.linalg.solve(self.g[:, off].T, -logs[off])
            shifted = logs + self.g.T @ v
        else:
            shifted = logs
        new_moduli = np.ones(m)
        for i in face:
            # |x̃_i| = e^{-λ_i} <= 1; clamp rounding just above 1
            new_moduli[i - 1] = 0.0 if i in zero_set else min(np.exp(shifted[i - 1]), 1.0)
        return zero_set, face, new_moduli

    def real(self, x):
        x = np.asarray(x, dtype=float)
        zero_set, face, moduli = self._retract(np.abs(x))
        signs = np.sign(x)
        return MomentAnglePoint(tuple(signs * moduli), zero_set, face, tuple(signs))

    def complex(self, z):
        z = np.asarray(z, dtype=complex)
        moduli = np.abs(z)
        zero_set, face, new_moduli = self._retract(moduli)
        args = np.where(moduli > ZERO_TOL, np.angle(z), 0.0)
        coords = new_moduli * np.exp(1j * args)
        return MomentAnglePoint(tuple(coords), zero_set, face, tuple(args))

    def orbit_parameter(self, x, retracted):
        """Least-squares v with <γ_i, v> = log|x̃_i / x_i| on nonzero coordinates, and its residual."""
        x = np.abs(np.asarray(x))
        y = np.abs(np.asarray(retracted.coords))
        live = [i for i in range(self.fd.m) if x[i] > ZERO_TOL]
        rhs = np.log(y[live]) - np.log(x[live])
        if self.gamma.dim == 0:
            return np.zeros(0), float(np.max(np.abs(rhs), initial=0.0))
        mat = self.g[:, live].T
        v, *_ = np.linalg.lstsq(mat, rhs, rcond=None)
        return v, float(np.max(np.abs(mat @ v - rhs), initial=0.0))


def retract_to_RK(fd, gamma, x):
    return Retraction(fd, gamma).real(x)


def retract_to_ZK(fd, gamma, z):
    return Retraction(fd, gamma).complex(z)
