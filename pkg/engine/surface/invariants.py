from collections import Counter, namedtuple
from logging import getLogger
from typing import Dict, List, Optional, Sequence, Tuple

import galois # type: ignore
import numpy as np # type: ignore

from engine.log import LOGGER_NAME
logger = getLogger(LOGGER_NAME)

from engine.normal.coords import QUAD, TRIANGLE
from engine.surface.complex import SurfaceComplex
from engine.topology.skeleton import Skeleton
from engine.unionfind import UnionFind


GF2 = galois.GF(2)

# `genus` is set for orientable components, `crosscaps` for non-orientable ones.
ComponentInvariants = namedtuple('ComponentInvariants', (
    'index', 'disks', 'chi', 'orientable', 'boundary_circles', 'genus', 'crosscaps',
    'triangle_count', 'quad_count', 'vertex_linking', 'linked_vertex'))


class SurfaceInvariants:
    """Classification data of a normal surface, per component."""
    def __init__(self, surface: SurfaceComplex, components: Sequence[ComponentInvariants]):
        self.surface = surface
        self.components = tuple(components)

    @property
    def chi(self) -> int:
        return sum(c.chi for c in self.components)

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def triangle_count(self) -> int:
        return self.surface.vector.triangle_count

    @property
    def quad_count(self) -> int:
        return self.surface.vector.quad_count

    @property
    def is_empty(self) -> bool:
        return len(self.components) == 0

    @property
    def is_closed(self) -> bool:
        return all(c.boundary_circles == 0 for c in self.components)

    @property
    def is_orientable(self) -> bool:
        return all(c.orientable for c in self.components)

    @property
    def is_connected(self) -> bool:
        return len(self.components) == 1

    @property
    def has_vertex_linking(self) -> bool:
        return any(c.vertex_linking for c in self.components)

    def topology(self) -> str:
        """Short name of the surface type, for reports."""
        if self.is_empty:
            return 'empty'
        names = [_component_name(c) for c in self.components]
        return ' + '.join(names)


def _component_name(c: ComponentInvariants) -> str:
    if c.orientable:
        if c.genus == 0:
            base = 'sphere'
        elif c.genus == 1:
            base = 'torus'
        else:
            base = 'genus {} surface'.format(c.genus)
    else:
        base = 'projective plane' if c.crosscaps == 1 else '{} crosscap surface'.format(c.crosscaps)
    if c.boundary_circles == 0:
        return base
    if c.orientable and c.genus == 0:
        if c.boundary_circles == 1:
            return 'disk'
        if c.boundary_circles == 2:
            return 'annulus'
    if not c.orientable and c.crosscaps == 1 and c.boundary_circles == 1:
        return 'mobius band'
    return '{} with {} boundary circles'.format(base, c.boundary_circles)


def components(surface: SurfaceComplex) -> List[List[int]]:
    """Disk indices of each component, via arcs shared by two disks."""
    dual = UnionFind(range(len(surface.disks)))
    for arc in surface.arcs:
        if len(arc.sides) == 2:
            dual.union(arc.sides[0][0], arc.sides[1][0])
    return dual.classes() # type: ignore


def _component_of(parts: List[List[int]]) -> Dict[int, int]:
    return {d: i for i, part in enumerate(parts) for d in part}


def _orientation(surface: SurfaceComplex) -> UnionFind:
    """Propagate disk orientations across arcs; a twisted class is non-orientable."""
    signs = UnionFind(range(len(surface.disks)))
    for arc in surface.arcs:
        if len(arc.sides) != 2:
            continue
        (d1, s1), (d2, s2) = arc.sides
        same = surface.disks[d1].directions[s1] == surface.disks[d2].directions[s2]
        # Coherent neighbours run along the shared arc in opposite directions.
        signs.union(d1, d2, 1 if same else 0)
    return signs


def _boundary_circles(surface: SurfaceComplex, disks: Sequence[int]) -> int:
    members = set(disks)
    boundary = [a for a in surface.arcs if len(a.sides) == 1 and a.sides[0][0] in members]
    circles = UnionFind()
    for arc in boundary:
        circles.add(arc.ends[0])
        circles.add(arc.ends[1])
        circles.union(arc.ends[0], arc.ends[1])
    return circles.count()


def detect_vertex_linking(surface: SurfaceComplex, skeleton: Skeleton) -> List[Optional[int]]:
    """For each component, the vertex class it links, or None.

    A component links a vertex when it is closed, has only triangles, and
    holds exactly one triangle at every corner of one vertex class.
    """
    parts = components(surface)
    result = [] # type: List[Optional[int]]
    for part in parts:
        result.append(_linked_vertex(surface, skeleton, part))
    return result


def _linked_vertex(surface: SurfaceComplex, skeleton: Skeleton, part: Sequence[int]) -> Optional[int]:
    disks = [surface.disks[d] for d in part]
    if any(d.kind != TRIANGLE for d in disks):
        return None
    if _boundary_circles(surface, part) > 0:
        return None
    corners = Counter((d.tet, d.type) for d in disks)
    vertices = {skeleton.vertex_of(t, a) for t, a in corners}
    if len(vertices) != 1:
        return None
    vertex = vertices.pop()
    expected = skeleton.vertex_class(vertex).corners
    if set(corners) != set(expected) or any(n != 1 for n in corners.values()):
        return None
    return vertex


def invariants(surface: SurfaceComplex) -> SurfaceInvariants:
    """Euler characteristic, orientability, boundary and genus of every component."""
    logger.debug('classifying surface - {}'.format(surface.vector))
    parts = components(surface)
    part_of = _component_of(parts)
    signs = _orientation(surface)
    linked = detect_vertex_linking(surface, surface.skeleton)

    points = Counter(part_of[p.fan[0][0]] for p in surface.points)
    arcs = Counter(part_of[a.sides[0][0]] for a in surface.arcs)

    result = []
    for i, part in enumerate(parts):
        chi = points[i] - arcs[i] + len(part)
        orientable = not signs.is_twisted(part[0])
        circles = _boundary_circles(surface, part)
        # 2 - chi - circles is 2g when orientable, the crosscap number otherwise.
        handles = 2 - chi - circles
        result.append(ComponentInvariants(
            index=i,
            disks=tuple(part),
            chi=chi,
            orientable=orientable,
            boundary_circles=circles,
            genus=handles // 2 if orientable else None,
            crosscaps=None if orientable else handles,
            triangle_count=sum(1 for d in part if surface.disks[d].kind == TRIANGLE),
            quad_count=sum(1 for d in part if surface.disks[d].kind == QUAD),
            vertex_linking=linked[i] is not None,
            linked_vertex=linked[i]
        ))
    return SurfaceInvariants(surface, result)


def _gf2_rank(matrix: np.ndarray) -> int:
    if matrix.size == 0:
        return 0
    return int(np.linalg.matrix_rank(GF2(matrix % 2)))


def betti_numbers(surface: SurfaceComplex, disks: Sequence[int]) -> Tuple[int, int, int]:
    """Mod-2 Betti numbers (b0, b1, b2) of the union of the given disks."""
    inside = set(disks)
    members = sorted(inside)
    arcs = [a for a in surface.arcs if a.sides[0][0] in inside]
    arc_column = {a.index: i for i, a in enumerate(arcs)}
    points = sorted({p for a in arcs for p in a.ends})
    point_column = {p: i for i, p in enumerate(points)}

    boundary2 = np.zeros((len(members), len(arcs)), dtype=int)
    for row, d in enumerate(members):
        for arc in surface.disks[d].arcs:
            boundary2[row, arc_column[arc]] += 1
    boundary1 = np.zeros((len(arcs), len(points)), dtype=int)
    for row, arc in enumerate(arcs):
        boundary1[row, point_column[arc.ends[0]]] += 1
        boundary1[row, point_column[arc.ends[1]]] += 1

    rank2 = _gf2_rank(boundary2)
    rank1 = _gf2_rank(boundary1)
    return len(points) - rank1, len(arcs) - rank1 - rank2, len(members) - rank2


def classification_consistent(surface: SurfaceComplex, component: ComponentInvariants) -> bool:
    """Check a component's classification data against its mod-2 homology."""
    b0, b1, b2 = betti_numbers(surface, component.disks)
    closed = component.boundary_circles == 0
    if component.orientable:
        if component.genus < 0 or 2 - 2 * component.genus - component.boundary_circles != component.chi:
            return False
        rank = 2 * component.genus
    else:
        if component.crosscaps < 1 or 2 - component.crosscaps - component.boundary_circles != component.chi:
            return False
        rank = component.crosscaps
    if not closed:
        rank += component.boundary_circles - 1
    return b0 == 1 and b2 == (1 if closed else 0) and b1 == rank
