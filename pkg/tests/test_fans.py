"""Fan validation, completeness, normal fans, polytopality and GKZ chambers."""

import random
from fractions import Fraction

import pytest

from galekit import fans
from galekit.cones import relint_contains, contains
from galekit.errors import (GalekitError, GALE_MISMATCH, DEPENDENT_SIMPLEX, NOT_A_FAN,
                            NOT_FULL_DIM, DELTA_NOT_INTERIOR, DELTA_OUTSIDE, NOT_GENERIC)
from galekit.fans import FanData
from galekit.gale import VectorConfiguration, gale_dual

from generators import fan_instance, in_relint
from oracles import in_relint as oracle_relint
from worked_data import (LINE_OPPOSITE, LINE_OPPOSITE_DUAL, LINE_SAME, LINE_SAME_DUAL, TWO_POINTS,
                         PLANE_A, PLANE_GAMMA, PLANE_FAN, PENTAGON_GAMMA, PENTAGON_EDGES,
                         PRISM_A, PRISM_GAMMA, TWISTED_FACETS, UNTWISTED_FACETS,
                         BROKEN_SWAP_FACETS, complex_of, prism_fan, mixed_prism_fan, as_sets)


# ---------------------------------------------------------------- one-dimensional pair

def test_opposite_rays_form_a_fan():
    verdict = fans.is_fan_data(FanData(TWO_POINTS, LINE_OPPOSITE), LINE_OPPOSITE_DUAL)
    assert verdict.is_fan and bool(verdict)


def test_equal_rays_overlap_with_witness():
    verdict = fans.is_fan_data(FanData(TWO_POINTS, LINE_SAME), LINE_SAME_DUAL)
    assert not verdict.is_fan
    assert as_sets(verdict.pair) == {frozenset({1}), frozenset({2})}
    assert verdict.witness == (1,)


def test_wrong_dual_is_rejected():
    with pytest.raises(GalekitError) as exc:
        fans.is_fan_data(FanData(TWO_POINTS, LINE_OPPOSITE), LINE_SAME_DUAL)
    assert exc.value.code == GALE_MISMATCH


def test_dependent_face_is_reported_first():
    cfg = VectorConfiguration.from_rows([[1, 2, -1]])
    with pytest.raises(GalekitError) as exc:
        fans.is_fan_data(FanData(complex_of([{1, 2}], 3), cfg))
    assert exc.value.code == DEPENDENT_SIMPLEX


# ---------------------------------------------------------------- prism triangulations

def test_twisted_prism_is_complete_but_not_polytopal():
    fd = prism_fan(TWISTED_FACETS)
    assert fans.is_fan_data(fd, PRISM_GAMMA).is_fan
    assert fans.is_complete(fd, PRISM_GAMMA)
    assert fans.is_polytopal(fd, PRISM_GAMMA) is None


def test_other_diagonal_makes_the_prism_polytopal():
    fd = prism_fan(UNTWISTED_FACETS)
    assert fans.is_complete(fd, PRISM_GAMMA)
    delta = fans.is_polytopal(fd, PRISM_GAMMA)
    assert delta is not None
    for face in fd.members():
        cols = PRISM_GAMMA.select_complement(face)
        assert oracle_relint(cols, delta)
    poly = fans.polyhedron_from_delta(PRISM_GAMMA, PRISM_A, delta)
    rebuilt, generic = fans.normal_fan(poly, PRISM_GAMMA)
    assert generic and set(rebuilt.collection.faces()) == set(fd.collection.faces())


def test_literal_swap_listing_is_not_a_triangulation():
    # keeps {1,2,4} next to {1,4,5}: the two diagonals of one square cross
    verdict = fans.is_fan_data(prism_fan(BROKEN_SWAP_FACETS), PRISM_GAMMA)
    assert not verdict.is_fan
    first, second = verdict.pair
    assert in_relint(PRISM_A, first, verdict.witness) and in_relint(PRISM_A, second, verdict.witness)


def test_polytopal_requires_a_fan():
    with pytest.raises(GalekitError) as exc:
        fans.is_polytopal(prism_fan(BROKEN_SWAP_FACETS), PRISM_GAMMA)
    assert exc.value.code == NOT_A_FAN


# ---------------------------------------------------------------- general flavour

def test_mixed_prism_is_a_complete_fan():
    fd = mixed_prism_fan()
    assert not fd.simplicial
    maximal = as_sets(fd.maximal_members())
    assert len(maximal) == 6
    assert sum(1 for s in maximal if len(s) == 4) == 2
    assert fans.is_fan_data(fd, PRISM_GAMMA).is_fan
    assert fans.is_complete(fd, PRISM_GAMMA)
    assert fans.is_polytopal(fd, PRISM_GAMMA) is None


def test_line_through_origin_is_not_strongly_convex():
    family = [set(), {1}, {2}, {1, 2}]
    # (1,0) and (-1,0) plus a third vector so that the configuration spans
    cfg = VectorConfiguration.from_rows([[1, -1, 0], [0, 0, 1]])
    verdict = fans.is_fan_data_general(family, cfg)
    assert not verdict.is_fan and "convex" in verdict.reason


def test_missing_face_breaks_closure():
    family = [set(), {1}, {1, 2}]
    verdict = fans.is_fan_data_general(family, PLANE_A)
    assert not verdict.is_fan and "face" in verdict.reason


def test_closure_adds_saturated_faces():
    # a3 = (-1,0) lies inside cone(a2, a4): it is no ray, and cone{2,4} is the whole cone
    family = fans.face_closure([{2, 3, 4}], PLANE_A)
    assert family == as_sets([set(), {2}, {4}, {2, 3, 4}])


# ---------------------------------------------------------------- completeness

def test_plane_fan_complete_and_half_line_not():
    assert fans.is_complete(PLANE_FAN, PLANE_GAMMA)
    half = FanData(complex_of([{1}], 1), VectorConfiguration.from_rows([[1]]))
    assert not fans.is_complete(half)


def test_ridge_and_swap_criteria_on_small_complexes():
    boundary = complex_of([{1, 2}, {2, 3}, {1, 3}], 3)
    assert fans.ridge_criterion(boundary.faces(), 2)
    assert fans.substitute_existence(fans.substitute_family(boundary, 2), 3)
    path = complex_of([{1, 2}, {2, 3}], 3)
    assert not fans.ridge_criterion(path.faces(), 2)
    assert not fans.substitute_existence(fans.substitute_family(path, 2), 3)
    assert not fans.substitute_existence(set(), 3)


def test_completeness_needs_a_fan():
    with pytest.raises(GalekitError) as exc:
        fans.is_complete(FanData(TWO_POINTS, LINE_SAME))
    assert exc.value.code == NOT_A_FAN


def test_ghost_vertex_keeps_fan_and_completeness():
    extended = fans.add_ghost_vertex(PLANE_FAN, (1, 1))
    assert extended.m == 5 and 5 in extended.collection.ghost_vertices
    assert fans.is_fan_data(extended).is_fan and fans.is_complete(extended)


# ---------------------------------------------------------------- normal fans

@pytest.mark.parametrize("b,facets,ghosts", [
    ((0, 0, 1, 2), [{3, 4}, {1, 4}, {1, 2}, {2, 3}], set()),
    ((0, 0, 2, 1), [{2, 4}, {1, 4}, {1, 2}], {3}),
])
def test_generic_normal_fans(b, facets, ghosts):
    fd, generic = fans.normal_fan(fans.Polyhedron(PLANE_A, b), PLANE_GAMMA)
    assert generic
    assert as_sets(fd.collection.facets) == as_sets(facets)
    assert set(fd.collection.ghost_vertices) == ghosts
    assert fans.dual_complex(fans.Polyhedron(PLANE_A, b), PLANE_GAMMA).facets == fd.collection.facets


def test_non_generic_normal_fan():
    poly = fans.polyhedron_from_delta(PLANE_GAMMA, PLANE_A, (1, 1))
    fd, generic = fans.normal_fan(poly, PLANE_GAMMA)
    assert not generic
    assert as_sets(fd.maximal_members()) == as_sets([{2, 3, 4}, {1, 4}, {1, 2}])
    assert fans.is_fan_data(fd, PLANE_GAMMA).is_fan
    assert fans.is_complete(fd, PLANE_GAMMA)
    with pytest.raises(GalekitError) as exc:
        fans.dual_complex(poly, PLANE_GAMMA)
    assert exc.value.code == NOT_GENERIC


def test_polyhedron_from_delta_reproduces_relint_family():
    poly = fans.polyhedron_from_delta(PLANE_GAMMA, PLANE_A, (1, 2))
    _, delta = fans.delta_of(poly, PLANE_GAMMA)
    assert delta == (1, 2)
    fd, _ = fans.normal_fan(poly, PLANE_GAMMA)
    assert as_sets(fd.collection.facets) == as_sets([{3, 4}, {1, 4}, {1, 2}, {2, 3}])
    with pytest.raises(GalekitError) as exc:
        fans.polyhedron_from_delta(PLANE_GAMMA, PLANE_A, (1, 0))
    assert exc.value.code == DELTA_NOT_INTERIOR


def test_pentagon_offsets_from_a_quarter_choice():
    a = gale_dual(PENTAGON_GAMMA)
    poly = fans.Polyhedron(a, (Fraction(1, 4), 0, Fraction(1, 4), Fraction(1, 4), Fraction(1, 4)))
    _, delta = fans.delta_of(poly, PENTAGON_GAMMA)
    assert delta == (0, 0, 1)
    fd, generic = fans.normal_fan(poly, PENTAGON_GAMMA)
    assert generic and as_sets(fd.collection.facets) == as_sets(PENTAGON_EDGES)


def test_all_ones_offsets_give_the_sum_of_dual_vectors():
    poly = fans.Polyhedron(PLANE_A, (1, 1, 1, 1))
    total = tuple(sum(c[r] for c in PLANE_GAMMA.columns) for r in range(2))
    assert fans.delta_of(poly, PLANE_GAMMA)[1] == total == (2, 3)


def test_lower_dimensional_polyhedron_is_refused():
    with pytest.raises(GalekitError) as exc:
        fans.normal_fan(fans.Polyhedron(PLANE_A, (0, 0, 0, 0)), PLANE_GAMMA)
    assert exc.value.code == NOT_FULL_DIM


def test_universal_complex_holds_the_pentagon():
    k = fans.universal_complex(PENTAGON_GAMMA)
    assert k.is_pure() and k.dimension == 1
    assert all(frozenset(e) in k for e in PENTAGON_EDGES)


def test_stabilizer_dimensions():
    collinear = VectorConfiguration.from_rows([[1, 2]])
    assert fans.stabilizer_dim(collinear, {2}) == 0
    assert fans.stabilizer_dim(collinear, {1, 2}) == 1
    assert fans.stabilizer_dim(PLANE_GAMMA, set()) == 0


# ---------------------------------------------------------------- GKZ chambers

def test_chambers_of_the_plane_example():
    full = fans.gkz_chamber(PLANE_GAMMA, (1, 2))
    assert relint_contains(full.cone, (1, 2))
    assert contains(full.cone, (1, 1)) and contains(full.cone, (0, 1))
    assert not contains(full.cone, (1, 0))
    ray = fans.gkz_chamber(PLANE_GAMMA, (1, 1))
    assert len(ray.equations) == 1 and contains(ray.cone, (3, 3))
    assert not contains(ray.cone, (1, 2))
    zero = fans.gkz_chamber(PLANE_GAMMA, (0, 0))
    assert all(all(x == 0 for x in g) for g in zero.cone.generators)


def test_same_chamber_relation():
    assert fans.same_chamber(PLANE_GAMMA, (1, 2), (1, 3))
    assert not fans.same_chamber(PLANE_GAMMA, (1, 2), (2, 1))
    assert fans.same_chamber(PLANE_GAMMA, (2, 1), (2, 1))
    with pytest.raises(GalekitError) as exc:
        fans.gkz_chamber(PLANE_GAMMA, (-1, 0))
    assert exc.value.code == DELTA_OUTSIDE


# ---------------------------------------------------------------- randomised agreement

def test_random_fan_verdicts_carry_valid_certificates():
    rng = random.Random(101)
    kinds = set()
    for _ in range(40):
        fd, gamma, kind = fan_instance(rng)
        verdict = fans.is_fan_data(fd, gamma)
        kinds.add((kind, verdict.is_fan))
        if not verdict.is_fan:
            first, second = verdict.pair
            assert in_relint(fd.config, first, verdict.witness)
            assert in_relint(fd.config, second, verdict.witness)
    assert any(ok for _, ok in kinds) and any(not ok for _, ok in kinds)
