import pytest

from conftest import CLOSED_FIXTURES, ONE_VERTEX_FIXTURES, load
from engine.errors import NormqError
from engine.normal.coords import QUAD, TRIANGLE, is_disjoint_sum, parse_vector
from engine.normal.enumerate import EnumerationConfig, enumerate_admissible, vertex_link_vector
from engine.surface.complex import build_surface
from engine.surface.invariants import betti_numbers, classification_consistent, invariants
from engine.topology.skeleton import compute_skeleton
from engine.topology.triangulation import parse_triangulation


def _build(loaded, text):
    return build_surface(loaded.tri, loaded.skeleton, parse_vector(text), loaded.system)


def test_vertex_link(s3):
    surface = _build(s3, '1 0 0 0 0 0 0  1 0 0 0 0 0 0')
    assert surface.counts() == {'points': 3, 'arcs': 3, 'disks': 2}
    assert surface.euler_characteristic == 2
    assert surface.is_closed
    assert all(len(arc.sides) == 2 for arc in surface.arcs)
    assert all(p.closed and len(p.fan) == 2 for p in surface.points)
    inv = invariants(surface)
    assert inv.component_count == 1
    component = inv.components[0]
    assert (component.chi, component.orientable, component.genus, component.boundary_circles) == (2, True, 0, 0)
    assert component.vertex_linking and component.linked_vertex == 0
    assert inv.topology() == 'sphere'
    assert classification_consistent(surface, component)
    assert betti_numbers(surface, component.disks) == (1, 0, 1)


def test_two_quads(s3):
    surface = _build(s3, '0 0 0 0 1 0 0  0 0 0 0 1 0 0')
    assert surface.counts() == {'points': 4, 'arcs': 4, 'disks': 2}
    assert [d.kind for d in surface.disks] == [QUAD, QUAD]
    assert all(len(d.corners) == 4 and len(d.arcs) == 4 for d in surface.disks)
    inv = invariants(surface)
    assert inv.chi == 2
    assert inv.is_connected and inv.is_closed and inv.is_orientable
    assert not inv.has_vertex_linking
    assert inv.topology() == 'sphere'


def test_quad_in_ball(ball):
    surface = _build(ball, '0 0 0 0 1 0 0')
    assert surface.counts() == {'points': 4, 'arcs': 4, 'disks': 1}
    assert not surface.is_closed
    assert all(not p.closed and len(p.fan) == 1 for p in surface.points)
    inv = invariants(surface)
    component = inv.components[0]
    assert (component.chi, component.boundary_circles, component.genus) == (1, 1, 0)
    assert inv.topology() == 'disk'
    assert not component.vertex_linking
    assert betti_numbers(surface, component.disks) == (1, 0, 0)
    assert classification_consistent(surface, component)


def test_triangle_in_ball(ball):
    surface = _build(ball, '1 0 0 0 0 0 0')
    assert surface.counts() == {'points': 3, 'arcs': 3, 'disks': 1}
    inv = invariants(surface)
    assert inv.topology() == 'disk'
    assert inv.components[0].linked_vertex is None


def test_parallel_copies(s3):
    surface = _build(s3, '2 0 0 0 0 0 0  2 0 0 0 0 0 0')
    inv = invariants(surface)
    assert inv.component_count == 2
    assert all(c.vertex_linking and c.linked_vertex == 0 for c in inv.components)
    assert inv.topology() == 'sphere + sphere'
    assert inv.chi == 4


def test_sum_with_vertex_link(s3):
    surface = _build(s3, '1 0 0 0 1 0 0  1 0 0 0 1 0 0')
    inv = invariants(surface)
    assert inv.component_count == 2
    assert inv.chi == 4
    assert [c.vertex_linking for c in inv.components].count(True) == 1


def test_stacking_order(s3):
    surface = _build(s3, '1 0 1 0 1 0 0  1 0 1 0 1 0 0')
    # Edge {0, 2} of each tetrahedron holds T0, then the quad, then T2.
    owners = {}
    for disk in surface.disks:
        for crossing in disk.crossings:
            owners[crossing] = (disk.kind, disk.type)
    assert [owners[0, 0, 2, pos] for pos in range(3)] == [(TRIANGLE, 0), (QUAD, 1), (TRIANGLE, 2)]


@pytest.mark.parametrize('name', CLOSED_FIXTURES)
def test_vertex_links_are_spheres(name):
    loaded = load(name)
    for vertex in loaded.skeleton.vertex_classes:
        v = vertex_link_vector(loaded.skeleton, vertex.index)
        surface = build_surface(loaded.tri, loaded.skeleton, v, loaded.system)
        inv = invariants(surface)
        assert inv.topology() == 'sphere'
        assert inv.components[0].linked_vertex == vertex.index
        assert classification_consistent(surface, inv.components[0])
        assert surface.read_vector() == v


@pytest.mark.parametrize('name', ONE_VERTEX_FIXTURES)
def test_one_vertex_link_counts(name):
    loaded = load(name)
    surface = build_surface(loaded.tri, loaded.skeleton, vertex_link_vector(loaded.skeleton, 0), loaded.system)
    assert len(surface.points) == 2 * len(loaded.skeleton.edge_classes)
    assert len(surface.arcs) == 3 * len(loaded.skeleton.face_classes)
    assert len(surface.disks) == 4 * loaded.tri.tet_count


def test_cells_are_consistent(s3):
    surface = _build(s3, '1 1 0 0 1 0 0  1 1 0 0 1 0 0')
    for disk in surface.disks:
        for side, arc_index in enumerate(disk.arcs):
            arc = surface.arcs[arc_index]
            assert (disk.index, side) in arc.sides
            assert set(arc.ends) == {disk.corners[side], disk.corners[(side + 1) % len(disk.corners)]}
    for point in surface.points:
        for (d, corner), (enter, leave) in zip(point.fan, point.sides):
            assert surface.disks[d].corners[corner] == point.index
            assert point.index in surface.arcs[enter].ends
            assert point.index in surface.arcs[leave].ends


def test_empty_surface(s3):
    surface = _build(s3, '0 0 0 0 0 0 0  0 0 0 0 0 0 0')
    assert surface.is_empty
    assert surface.counts() == {'points': 0, 'arcs': 0, 'disks': 0}
    inv = invariants(surface)
    assert inv.is_empty
    assert inv.topology() == 'empty'


def test_rejected_vectors(s3):
    with pytest.raises(NormqError, match='not admissible'):
        _build(s3, '0 0 0 0 1 1 0  0 0 0 0 1 1 0')
    with pytest.raises(NormqError, match='matching violated'):
        _build(s3, '0 0 0 0 1 0 0  0 0 0 0 0 0 0')
    with pytest.raises(NormqError, match='expected 14'):
        _build(s3, '1 0 0 0 0 0 0')


def test_non_manifold_identification():
    tri = parse_triangulation('1\n0 1 032\n0 0 132\nbdry\nbdry\n')
    skeleton = compute_skeleton(tri)
    with pytest.raises(NormqError, match='non-manifold identification'):
        build_surface(tri, skeleton, parse_vector('0 0 0 0 0 1 0'))


def test_euler_characteristic_adds_over_disjoint_sums(s3):
    config = EnumerationConfig(max_coordinate=1)
    solutions = enumerate_admissible(s3.tri, s3.skeleton, s3.system, config)
    chi = {v: build_surface(s3.tri, s3.skeleton, v, s3.system).euler_characteristic for v in solutions}
    for a in solutions:
        if a.quad_count > 0:
            continue
        for b in solutions:
            assert is_disjoint_sum(a, b)
            total = build_surface(s3.tri, s3.skeleton, a + b, s3.system)
            assert total.euler_characteristic == chi[a] + chi[b]
