"""Intersections of diagonal quadrics and the complexes they determine."""

import random
from fractions import Fraction

import pytest

from galekit import quadrics
from galekit.errors import GalekitError, DEGENERATE, SIEGEL_FAIL, WEAK_HYP_FAIL, BAD_INPUT
from galekit.fans import Polyhedron
from galekit.gale import PointConfiguration

from oracles import euler_by_cells
from worked_data import (PLANE_A, PLANE_GAMMA, PENTAGON_GAMMA, PENTAGON_POINTS, PENTAGON_EDGES,
                         PRISM_POINTS, complex_of, as_sets)

LINK_ROWS = [
    [1, 0, -1, 2, -2],
    [1, -2, 1, -1, -1],
    [1, 1, 1, 1, 1],
]


def test_plane_system_and_its_complexes():
    system = quadrics.build_quadrics(PLANE_GAMMA, (1, 2))
    assert system.nondegenerate
    assert system.equations() == ["x1^2 + x3^2 = 1", "x1^2 + x2^2 + x4^2 = 2"]
    triangle = quadrics.complex_from_delta(PLANE_GAMMA, (2, 1))
    assert as_sets(triangle.facets) == as_sets([{2, 4}, {1, 4}, {1, 2}])
    assert triangle.ghost_vertices == frozenset({3})


def test_wall_delta_is_degenerate():
    assert not quadrics.build_quadrics(PLANE_GAMMA, (1, 1)).nondegenerate
    with pytest.raises(GalekitError) as exc:
        quadrics.complex_from_delta(PLANE_GAMMA, (1, 1))
    assert exc.value.code == DEGENERATE


def test_pentagon_link_coefficients():
    system = quadrics.link_system(PENTAGON_POINTS)
    assert [list(r) for r in system.gamma.rows()] == LINK_ROWS
    assert system.delta == (0, 0, 1)
    assert system.equations() == [
        "x1^2 - x3^2 + 2*x4^2 - 2*x5^2 = 0",
        "x1^2 - 2*x2^2 + x3^2 - x4^2 - x5^2 = 0",
        "x1^2 + x2^2 + x3^2 + x4^2 + x5^2 = 1",
    ]
    assert quadrics.link_system(PENTAGON_POINTS, quadrics.HERMITIAN).equations()[2] == \
        "|z1|^2 + |z2|^2 + |z3|^2 + |z4|^2 + |z5|^2 = 1"


def test_pentagon_surface_and_shifted_spheres():
    k = quadrics.complex_from_delta(PENTAGON_GAMMA, (0, 0, 1))
    assert as_sets(k.facets) == as_sets(PENTAGON_EDGES)
    chi = quadrics.euler_characteristic_RK(k)
    assert chi == -8 == 2 - 2 * 5
    shifted = quadrics.complex_from_delta(PENTAGON_GAMMA, (1, 0, 1))
    assert as_sets(shifted.facets) == as_sets([{2, 3}, {3, 5}, {2, 5}])
    assert shifted.ghost_vertices == frozenset({1, 4})
    assert quadrics.euler_characteristic_RK(shifted) == 8 == 4 * 2


def test_euler_characteristic_against_cell_count():
    rng = random.Random(17)
    for _ in range(30):
        m = rng.randint(1, 6)
        facets = [set(rng.sample(range(1, m + 1), rng.randint(0, m))) for _ in range(rng.randint(1, 3))]
        k = complex_of(facets, m)
        assert quadrics.euler_characteristic_RK(k) == euler_by_cells(k.faces(), m)


def test_prism_points_fail_weak_hyperbolicity():
    # opposite vertices of the hexagon put the origin on a segment
    with pytest.raises(GalekitError) as exc:
        quadrics.link_system(PRISM_POINTS)
    assert exc.value.code == WEAK_HYP_FAIL


def test_origin_outside_hull_fails_siegel():
    points = PointConfiguration.from_rows([[1, 2, 3], [1, 2, 4]])
    with pytest.raises(GalekitError) as exc:
        quadrics.link_system(points)
    assert exc.value.code == SIEGEL_FAIL


def test_segment_link_is_two_circles_worth_of_points():
    system = quadrics.link_system(PointConfiguration.from_rows([[1, -1]]))
    assert system.equations() == ["x1^2 - x2^2 = 0", "x1^2 + x2^2 = 1"]
    half = Fraction(1, 2)
    assert system.evaluate((half, half)) == (0, -half)


def test_evaluate_on_a_solution():
    system = quadrics.build_quadrics(PLANE_GAMMA, (1, 2))
    assert system.evaluate((1, 1, 0, 0)) == (0, 0)
    assert system.to_json()["nondegenerate"] is True


def test_slices_of_the_trapezoid():
    poly = Polyhedron(PLANE_A, (0, 0, 1, 2))
    assert quadrics.slice_check(poly, PLANE_GAMMA, (1, 2))
    assert not quadrics.slice_check(poly, PLANE_GAMMA, (1, 3))


def test_delta_length_is_checked():
    with pytest.raises(GalekitError) as exc:
        quadrics.build_quadrics(PLANE_GAMMA, (1, 2, 3))
    assert exc.value.code == BAD_INPUT


def test_complex_structure_parity():
    from worked_data import PLANE_FAN, prism_fan, TWISTED_FACETS
    assert quadrics.parity_check_for_complex_structure(PLANE_FAN)
    assert quadrics.parity_check_for_complex_structure(prism_fan(TWISTED_FACETS)) is False
