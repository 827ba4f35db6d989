"""Lattices, nonsingularity, stabilisers, Cartier divisors, nef and ample cones."""

import random

import pytest

from galekit import toric
from galekit.errors import GalekitError, NOT_INTEGRAL, NOT_COMPLETE, INFINITE, NOT_A_FAN, BAD_INPUT
from galekit.fans import FanData, validate
from galekit.gale import VectorConfiguration
from galekit.linalg import Matrix
from galekit.snf import elementary_divisors

from worked_data import (PLANE_A, PLANE_GAMMA, PLANE_FAN, PRISM_A, PRISM_GAMMA, TWISTED_FACETS,
                         UNTWISTED_FACETS, LINE_SAME, TWO_POINTS, complex_of, prism_fan,
                         mixed_prism_fan)

from generators import random_spanning_config


def test_lattice_span_coordinates():
    ld = toric.lattice_span(PLANE_A)
    assert ld.coords.is_integral()
    assert ld.n_basis @ ld.coords == Matrix.from_columns(PLANE_A.columns, nrows=2)
    doubled = toric.lattice_span(VectorConfiguration.from_rows([[2, 0], [0, 2]]))
    assert sorted(abs(x) for r in doubled.n_basis.entries for x in r) == [0, 0, 2, 2]


def test_lattice_span_on_random_configurations():
    rng = random.Random(31)
    for _ in range(40):
        cfg = random_spanning_config(rng, rng.randint(1, 3), rng.randint(3, 6))
        ld = toric.lattice_span(cfg)
        # the coordinates of A generate Z^n
        assert elementary_divisors(ld.coords) == [1] * cfg.dim
        assert ld.n_basis @ ld.coords == Matrix.from_columns(cfg.columns, nrows=cfg.dim)


def test_fractional_lattice_data_is_refused():
    with pytest.raises(GalekitError) as exc:
        toric.lattice_span(VectorConfiguration.from_rows([["1/2", 1]]))
    assert exc.value.code == NOT_INTEGRAL


def test_nonsingular_plane_fan_and_singular_line():
    ld = toric.lattice_span(PLANE_A)
    assert toric.is_nonsingular(PLANE_FAN, ld)
    odd = VectorConfiguration.from_rows([[2, -1]])
    ld_odd = toric.lattice_span(odd)
    assert not toric.is_nonsingular(FanData(TWO_POINTS, odd), ld_odd)


def test_basis_part_agrees_with_dual_lattice_span():
    ld = toric.lattice_span(PRISM_A)
    gamma = toric.integer_gale_dual(ld)
    verdicts = {toric.is_part_of_basis(ld, face, gamma)  # raises if the two routes disagree
                for face in prism_fan(TWISTED_FACETS).members()}
    assert True in verdicts


def test_stabiliser_orders():
    collinear = VectorConfiguration.from_rows([[1, 2]])
    assert toric.stabilizer_order(collinear, {1}) == 2
    assert toric.stabilizer_order(collinear, set()) == 1
    with pytest.raises(GalekitError) as exc:
        toric.stabilizer_order(collinear, {1, 2})
    assert exc.value.code == INFINITE


def test_class_groups():
    assert toric.class_group(PLANE_A) == (2, [])
    assert toric.class_group(VectorConfiguration.from_rows([[2, -1]])) == (1, [])
    assert toric.class_group(VectorConfiguration.from_rows([[2, 2, 0], [0, 2, 2]]))[0] == 1


def test_cartier_on_the_mixed_prism():
    fd = validate(mixed_prism_fan(), PRISM_GAMMA)
    ld = toric.lattice_span(PRISM_A)
    verdicts = [toric.is_cartier(fd, PRISM_A, ld, [j, 0, 0, j, 0, 0]) for j in (1, 2, 3)]
    assert verdicts == [False, False, True]
    assert toric.cartier_multiple(fd, PRISM_A, ld, [1, 0, 0, 1, 0, 0]) == 3
    with pytest.raises(GalekitError) as exc:
        toric.is_cartier(fd, PRISM_A, ld, ["1/2", 0, 0, 0, 0, 0])
    assert exc.value.code == NOT_INTEGRAL


def test_every_divisor_is_cartier_on_a_nonsingular_fan():
    ld = toric.lattice_span(PLANE_A)
    rng = random.Random(2)
    for _ in range(10):
        assert toric.is_cartier(PLANE_FAN, PLANE_A, ld, [rng.randint(-5, 5) for _ in range(4)])


def test_nef_and_ample_on_the_mixed_prism():
    fd = validate(mixed_prism_fan(), PRISM_GAMMA)
    nef = toric.nef_cone(fd, PRISM_A, PRISM_GAMMA)
    rays = [g for g in nef.generators if any(g)]
    assert rays == [(0, 0, 1)]
    ray_point = tuple(a + b for a, b in zip(PRISM_GAMMA.columns[0], PRISM_GAMMA.columns[3]))
    assert ray_point == (0, 0, 2)
    assert not toric.ample_contains(fd, PRISM_A, ray_point, PRISM_GAMMA)
    assert not toric.is_projective(fd, PRISM_A, PRISM_GAMMA)


def test_nef_and_ample_on_the_plane_fan():
    nef = toric.nef_cone(PLANE_FAN, PLANE_A, PLANE_GAMMA)
    assert sorted(nef.generators) == [(0, 1), (1, 1)]
    equations, inequalities = toric.nef_cone_hrep(nef)
    assert equations == [] and len(inequalities) == 2
    assert toric.ample_contains(PLANE_FAN, PLANE_A, (1, 2), PLANE_GAMMA)
    assert not toric.ample_contains(PLANE_FAN, PLANE_A, (1, 1), PLANE_GAMMA)
    assert toric.is_projective(PLANE_FAN, PLANE_A, PLANE_GAMMA)


def test_prism_projectivity_follows_polytopality():
    assert not toric.is_projective(prism_fan(TWISTED_FACETS), PRISM_A, PRISM_GAMMA)
    assert toric.is_projective(prism_fan(UNTWISTED_FACETS), PRISM_A, PRISM_GAMMA)


def test_incomplete_or_invalid_fans_are_refused():
    half = complex_of([{1}], 2)
    cfg = VectorConfiguration.from_rows([[1, -1]])
    with pytest.raises(GalekitError) as exc:
        toric.nef_cone(half, cfg)
    assert exc.value.code == NOT_COMPLETE
    with pytest.raises(GalekitError) as exc:
        toric.is_nonsingular(FanData(TWO_POINTS, LINE_SAME), toric.lattice_span(LINE_SAME))
    assert exc.value.code == NOT_A_FAN
    with pytest.raises(GalekitError) as exc:
        toric.is_cartier(PLANE_FAN, PLANE_A, toric.lattice_span(PLANE_A), [1, 2])
    assert exc.value.code == BAD_INPUT
