import pytest

from conftest import ONE_VERTEX_FIXTURES, load
from engine.decompose.decomposition import (decompose, linked_vertex, singular_points, singular_points_by_link,
                                            strongly_connected_components, triangle_runs)
from engine.decompose.gamma import gamma_graph
from engine.errors import NormqError
from engine.normal.coords import QUAD, TRIANGLE, parse_vector
from engine.normal.enumerate import EnumerationConfig, enumerate_admissible
from engine.surface.complex import build_surface

T, Q = TRIANGLE, QUAD


def _build(loaded, text):
    return build_surface(loaded.tri, loaded.skeleton, parse_vector(text), loaded.system)


def _surfaces(loaded):
    config = EnumerationConfig(max_coordinate=1)
    for v in enumerate_admissible(loaded.tri, loaded.skeleton, loaded.system, config):
        yield build_surface(loaded.tri, loaded.skeleton, v, loaded.system)


@pytest.mark.parametrize('kinds, closed, runs', [
    ([T, T, T], True, [[0, 1, 2]]),
    ([T, T, T], False, [[0, 1, 2]]),
    ([T, Q, T, Q], True, [[2], [0]]),
    ([T, Q, T], True, [[2, 0]]),
    ([T, Q, T], False, [[0], [2]]),
    ([Q, Q], True, []),
    ([], True, [])
])
def test_triangle_runs(kinds, closed, runs):
    assert triangle_runs(kinds, closed) == runs


def test_vertex_link(s3):
    dec = decompose(_build(s3, '1 0 0 0 0 0 0  1 0 0 0 0 0 0'))
    assert dec.omega == ()
    assert not dec.has_quads
    assert len(dec.a_prime) == 1
    assert dec.a_prime.components[0].chi == 2
    assert dec.a_prime.boundary_circles == 0
    assert dec.chi_a_prime == 2
    assert dec.chi_b_prime == 0
    assert dec.b_prime_direct == 0
    assert dec.frontier_circles == 0
    assert dec.weights.total == 0
    assert len(dec.components) == 1
    assert len(dec.components[0].triangles) == 2
    assert linked_vertex(dec.components[0]) == 0


def test_two_quads(s3):
    dec = decompose(_build(s3, '0 0 0 0 1 0 0  0 0 0 0 1 0 0'))
    assert dec.has_quads
    assert len(dec.a_prime) == 0
    assert dec.chi_a_prime == 0
    assert dec.chi_b_prime == 2
    assert dec.b_prime_direct == 2
    assert (dec.weights.total, dec.weights.boundary) == (8, 0)
    assert dec.stats() == {
        'a_prime_components': 0,
        'a_prime_boundary': 0,
        'chi_a_prime': 0,
        'chi_b_prime': 2,
        'chi_b_prime_direct': 2,
        'b_prime_boundary': 0,
        'singular_points': 0,
        'weight_b': 8,
        'weight_boundary_b': 0,
        'strong_components': 0
    }


def test_quad_in_ball(ball):
    dec = decompose(_build(ball, '0 0 0 0 1 0 0'))
    assert (dec.weights.total, dec.weights.boundary) == (4, 4)
    assert all(w == 1 for w in dec.weights.arcs.values())
    assert dec.b_prime_direct == 1


def test_triangle_in_ball(ball):
    dec = decompose(_build(ball, '1 0 0 0 0 0 0'))
    assert len(dec.a_prime) == 1
    assert dec.a_prime.boundary_circles == 1
    assert dec.chi_a_prime == 1
    assert dec.a_prime.components[0].orientable


def test_disjoint_sum(s3):
    dec = decompose(_build(s3, '1 0 0 0 1 0 0  1 0 0 0 1 0 0'))
    assert dec.chi_a_prime == 2
    assert dec.chi_b_prime == 2
    assert dec.b_prime_direct == 2
    assert dec.weights.total == 8


def test_strong_components_link_one_vertex(s3):
    for surface in _surfaces(s3):
        components = strongly_connected_components(surface, strict=True)
        assert all(linked_vertex(c) is not None for c in components)
        assert sum(len(c.triangles) for c in components) == surface.vector.triangle_count


@pytest.mark.parametrize('name', ONE_VERTEX_FIXTURES)
def test_singular_points_agree(name):
    for surface in _surfaces(load(name)):
        assert singular_points(surface) == singular_points_by_link(surface)


@pytest.mark.parametrize('name', ONE_VERTEX_FIXTURES + ['s3_double.tri'])
def test_weight_counts_quad_sides(name):
    for surface in _surfaces(load(name)):
        dec = decompose(surface)
        assert dec.weights.total == 4 * surface.vector.quad_count
        assert dec.chi_a_prime + dec.chi_b_prime == surface.euler_characteristic


def test_gamma_two_quads(s3):
    surface = _build(s3, '0 0 0 0 1 0 0  0 0 0 0 1 0 0')
    graph = gamma_graph(surface, strongly_connected_components(surface))
    assert graph.q_vertices == (('Q', 0), ('Q', 1))
    assert graph.s_vertices == ()
    assert len(graph.edges) == 4
    assert graph.loops == []
    assert graph.degrees() == {('Q', 0): 4, ('Q', 1): 4}
    assert graph.q_degree_sum == 8


def test_gamma_quad_in_ball(ball):
    surface = _build(ball, '0 0 0 0 1 0 0')
    graph = gamma_graph(surface, strongly_connected_components(surface))
    assert graph.edges == ()
    assert graph.degrees() == {('Q', 0): 0}


def test_gamma_rejects_vertex_links(s3):
    surface = _build(s3, '1 0 0 0 1 0 0  1 0 0 0 1 0 0')
    with pytest.raises(NormqError, match='vertex-linking component present'):
        gamma_graph(surface, strongly_connected_components(surface))
