from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis.strategies import permutations

from conftest import CLOSED_FIXTURES, ONE_VERTEX_FIXTURES, load
from engine.errors import NormqError
from engine.topology.skeleton import compute_skeleton, max_vertex_degree
from engine.topology.triangulation import parse_triangulation


def test_ball():
    skeleton = load('ball1.tri').skeleton
    assert [len(v.corners) for v in skeleton.vertex_classes] == [1, 1, 1, 1]
    assert [skeleton.edge_degree(e.index) for e in skeleton.edge_classes] == [1] * 6
    assert len(skeleton.face_classes) == 4
    assert all(f.boundary for f in skeleton.face_classes)
    assert all(v.boundary and v.link_ok for v in skeleton.vertex_classes)
    assert max_vertex_degree(skeleton) == 1


def test_double_tetrahedron():
    skeleton = load('s3_double.tri').skeleton
    assert len(skeleton.vertex_classes) == 4
    for v in skeleton.vertex_classes:
        a = v.corners[0][1]
        assert v.corners == ((0, a), (1, a))
    assert [skeleton.edge_degree(e.index) for e in skeleton.edge_classes] == [2] * 6
    assert len(skeleton.interior_faces) == 4
    assert skeleton.is_closed
    assert skeleton.euler_characteristic == 0
    assert skeleton.reversed_edges == []
    assert skeleton.irregular_vertices == []
    assert max_vertex_degree(skeleton) == 2


@pytest.mark.parametrize('name', ONE_VERTEX_FIXTURES)
def test_one_vertex(name):
    loaded = load(name)
    skeleton = loaded.skeleton
    assert len(skeleton.vertex_classes) == 1
    assert skeleton.corner_count(0) == 4 * loaded.tri.tet_count
    assert max_vertex_degree(skeleton) == 4 * loaded.tri.tet_count


@pytest.mark.parametrize('name, degrees', [
    ('onevertex_t1.tri', [1, 5]),
    ('onevertex_t2_double.tri', [2, 4, 6]),
    ('onevertex_t2_twisted.tri', [2, 5, 5]),
    ('census_l41.tri', [2, 4]),
    ('census_l52.tri', [3, 3])
])
def test_edge_degrees(name, degrees):
    skeleton = load(name).skeleton
    assert sorted(skeleton.edge_degree(e.index) for e in skeleton.edge_classes) == degrees


@pytest.mark.parametrize('name', CLOSED_FIXTURES + ['ball1.tri'])
def test_counting_invariants(name):
    loaded = load(name)
    skeleton, t = loaded.skeleton, loaded.tri.tet_count
    assert sum(skeleton.edge_degree(e.index) for e in skeleton.edge_classes) == 6 * t
    assert sum(skeleton.corner_count(v.index) for v in skeleton.vertex_classes) == 4 * t
    interior = len(skeleton.interior_faces)
    assert 2 * interior + (len(skeleton.face_classes) - interior) == 4 * t
    for f in skeleton.face_classes:
        assert len(f.slots) == (1 if f.boundary else 2)


@pytest.mark.parametrize('name', CLOSED_FIXTURES)
def test_closed_manifolds(name):
    skeleton = load(name).skeleton
    assert skeleton.euler_characteristic == 0
    assert all(v.link_euler == 2 and v.link_ok for v in skeleton.vertex_classes)


def test_reversed_edge_detected():
    skeleton = compute_skeleton(parse_triangulation('1\n0 1 023\n0 0 123\nbdry\nbdry\n'))
    assert skeleton.reversed_edges == []
    # Folding face 0 onto face 1 with 2 <-> 3 swapped turns edge {2, 3} around.
    skeleton = compute_skeleton(parse_triangulation('1\n0 1 032\n0 0 132\nbdry\nbdry\n'))
    assert len(skeleton.reversed_edges) == 1
    reversed_edge = skeleton.edge_classes[skeleton.reversed_edges[0]]
    assert (0, 2, 3) in reversed_edge.slots


def test_unknown_vertex_class():
    skeleton = load('s3_double.tri').skeleton
    with pytest.raises(NormqError, match='unknown vertex class'):
        skeleton.vertex_class(4)
    with pytest.raises(NormqError, match='unknown vertex class'):
        skeleton.vertex_class(-1)


def test_idempotent():
    tri = load('onevertex_t2_twisted.tri').tri
    first, second = compute_skeleton(tri), compute_skeleton(tri)
    assert first.vertex_classes == second.vertex_classes
    assert first.edge_classes == second.edge_classes
    assert first.face_classes == second.face_classes


def _shape(skeleton):
    return (
        sorted(len(v.corners) for v in skeleton.vertex_classes),
        sorted(len(e.slots) for e in skeleton.edge_classes),
        Counter(f.boundary for f in skeleton.face_classes),
        sorted(v.link_euler for v in skeleton.vertex_classes),
        len(skeleton.reversed_edges)
    )


@settings(max_examples=20, deadline=None)
@given(order=permutations(range(2)))
def test_relabeling_twisted(order):
    tri = load('onevertex_t2_twisted.tri').tri
    assert _shape(compute_skeleton(tri.relabel(order))) == _shape(compute_skeleton(tri))


@settings(max_examples=20, deadline=None)
@given(order=permutations(range(3)))
def test_relabeling_chain(order):
    tri = load('ball3_chain.tri').tri
    assert _shape(compute_skeleton(tri.relabel(order))) == _shape(compute_skeleton(tri))


def test_chain():
    skeleton = load('ball3_chain.tri').skeleton
    assert not skeleton.is_closed
    assert len(skeleton.interior_faces) == 2
    assert len(skeleton.vertex_classes) == 6
    assert all(v.boundary and v.link_euler == 1 and v.link_ok for v in skeleton.vertex_classes)
    assert skeleton.euler_characteristic == 1
