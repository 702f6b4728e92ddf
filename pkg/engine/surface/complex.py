from collections import namedtuple
from logging import getLogger
from typing import Dict, List, Optional, Tuple

from engine.log import LOGGER_NAME
logger = getLogger(LOGGER_NAME)

from engine.context import context
from engine.errors import NormqError
from engine.normal.coords import (DISKS_PER_TET, QUAD, TRIANGLE, NormalVector, disk_type, is_admissible,
                                  quad_cuts, quad_pairs, quad_separating)
from engine.normal.matching import MatchingSystem, build_matching_system, satisfies_matching
from engine.topology.perm import edge_faces, edges, face_vertices, inverse
from engine.topology.skeleton import Skeleton
from engine.topology.triangulation import Triangulation
from engine.unionfind import UnionFind


# A crossing is where a disk meets an edge slot: (tet, a, b, pos) with a < b
# and pos counted from a.
Crossing = Tuple[int, int, int, int]

# `corners[i]` and `corners[i+1]` bound `arcs[i]`; `directions[i]` is +1 when
# the disk runs along arcs[i] from its end 0 to its end 1.
Disk = namedtuple('Disk', ('index', 'tet', 'kind', 'type', 'copy', 'crossings', 'corners', 'arcs', 'directions'))
# `sides` lists (disk, side) pairs: one on the boundary of M, two inside.
Arc = namedtuple('Arc', ('index', 'tet', 'face', 'corner', 'distance', 'sides', 'ends'))
# `fan` lists (disk, corner) pairs in order around the point; `sides[i]` holds
# the arcs through which the walk enters and leaves fan[i]. `closed` is False
# when the point lies on the boundary of M.
Point = namedtuple('Point', ('index', 'edge_class', 'fan', 'sides', 'closed'))


class SurfaceComplex:
    """The 0-, 1- and 2-cells of the normal surface with given coordinates."""
    def __init__(self, tri: Triangulation, skeleton: Skeleton, vector: NormalVector,
            disks: List[Disk], arcs: List[Arc], points: List[Point]):
        self.triangulation = tri
        self.skeleton = skeleton
        self.vector = vector
        self.disks = tuple(disks)
        self.arcs = tuple(arcs)
        self.points = tuple(points)

    @property
    def euler_characteristic(self) -> int:
        return len(self.points) - len(self.arcs) + len(self.disks)

    @property
    def is_empty(self) -> bool:
        return len(self.disks) == 0

    @property
    def is_closed(self) -> bool:
        return all(len(arc.sides) == 2 for arc in self.arcs)

    @property
    def triangles(self) -> List[Disk]:
        return [d for d in self.disks if d.kind == TRIANGLE]

    @property
    def quads(self) -> List[Disk]:
        return [d for d in self.disks if d.kind == QUAD]

    def counts(self) -> Dict[str, int]:
        return {'points': len(self.points), 'arcs': len(self.arcs), 'disks': len(self.disks)}

    def read_vector(self) -> NormalVector:
        """Disk multiplicities by type, read back off the cells."""
        entries = [0] * (DISKS_PER_TET * self.triangulation.tet_count)
        for disk in self.disks:
            offset = disk.type if disk.kind == TRIANGLE else 3 + disk.type
            entries[DISKS_PER_TET * disk.tet + offset] += 1
        return NormalVector(entries)


class _Layout:
    """Positions of disks along the edges and faces of each tetrahedron."""
    def __init__(self, v: NormalVector):
        self.v = v

    def edge_length(self, t: int, a: int, b: int) -> int:
        """Number of crossings on edge {a, b} of tetrahedron t."""
        k = self.v.quad_type(t)
        quads = self.v.quads(t, k) if k and quad_cuts(k, a, b) else 0
        return self.v.triangles(t, a) + self.v.triangles(t, b) + quads

    def arc_count(self, t: int, face: int, corner: int) -> int:
        """Number of arcs in a face linking one of its corners."""
        return self.v.triangles(t, corner) + self.v.quads(t, quad_separating(corner, face))

    def quad_depth(self, t: int, corner: int, copy: int) -> int:
        """Distance from a corner of quad copy `copy`, counting only the quad stack."""
        k = self.v.quad_type(t)
        if corner in quad_pairs(k)[0]:
            return copy
        return self.v.quads(t, k) - 1 - copy

    def crossing(self, t: int, near: int, far: int, distance: int) -> Crossing:
        """The crossing on edge {near, far} at a distance from `near`."""
        if near < far:
            return (t, near, far, distance)
        return (t, far, near, self.edge_length(t, near, far) - 1 - distance)


def _disk_edges(kind: str, type_: int) -> List[Tuple[int, int]]:
    """Edges met by a disk type, as (corner-side vertex, other vertex), in cyclic order."""
    if kind == TRIANGLE:
        others = [x for x in range(4) if x != type_]
        return [(type_, x) for x in others]
    (p0, p1), (r0, r1) = quad_pairs(type_)
    return [(p0, r0), (p0, r1), (p1, r1), (p1, r0)]


def _side(e: Tuple[int, int], f: Tuple[int, int]) -> Tuple[int, int, int, int]:
    """Linked corner, the two other face vertices in traversal order, and the face of a disk side."""
    common = set(e) & set(f)
    if len(common) != 1:
        raise AssertionError('unexpected disk edges: {}, {}'.format(e, f))
    c = common.pop()
    u = e[0] if e[1] == c else e[1]
    w = f[0] if f[1] == c else f[1]
    return c, u, w, 6 - c - u - w


@context(vector='v')
def build_surface(tri: Triangulation, skeleton: Skeleton, v: NormalVector,
        system: Optional[MatchingSystem]=None) -> SurfaceComplex:
    """Glue normal disks into the cell complex of the surface."""
    logger.debug('building surface - {}'.format(v))
    if len(v) != DISKS_PER_TET * tri.tet_count:
        raise NormqError('vector has {} entries, expected {}'.format(len(v), DISKS_PER_TET * tri.tet_count))
    if not is_admissible(v):
        raise NormqError('not admissible: {}'.format(v))
    if system is None:
        system = build_matching_system(tri, skeleton)
    if not satisfies_matching(v, system):
        raise NormqError('matching violated: {}'.format(v))

    layout = _Layout(v)
    for edge in skeleton.edge_classes:
        t, a, b = edge.slots[0]
        if edge.reversed and layout.edge_length(t, a, b) % 2 == 1:
            raise NormqError('non-manifold identification: edge class {} is glued to itself reversed'.format(edge.index))

    disks, owner = _make_disks(tri, layout)
    points, point_of = _make_points(tri, skeleton, layout, owner)
    arcs = _make_arcs(tri, skeleton, layout, disks, point_of)

    # Fill in disk corners and arcs now that points and arcs are numbered.
    arc_of = {(arc.tet, arc.face, arc.corner, arc.distance): arc.index for arc in arcs}
    finished = []
    for disk in disks:
        corners = tuple(point_of[c] for c in disk.crossings)
        finished.append(disk._replace(corners=corners, arcs=tuple(arc_of[key] for key in disk.arcs)))
    points = [p._replace(sides=tuple(
        (_arc_at(finished[d], c, enter), _arc_at(finished[d], c, leave))
        for (d, c), (enter, leave) in zip(p.fan, p.sides))) for p in points]

    surface = SurfaceComplex(tri, skeleton, v, finished, arcs, points)
    logger.debug('surface has {} points, {} arcs, {} disks'.format(len(points), len(arcs), len(finished)))
    return surface


def _make_disks(tri: Triangulation, layout: _Layout) -> Tuple[List[Disk], Dict[Crossing, Tuple[int, int]]]:
    """Instantiate disks in coordinate order; disk arcs hold canonical arc keys until numbered."""
    disks = []
    owner = {} # type: Dict[Crossing, Tuple[int, int]]
    v = layout.v
    for index in range(len(v)):
        kind_type = disk_type(index)
        t, kind, type_ = kind_type.tet, kind_type.kind, kind_type.index
        for copy in range(v[index]):
            disk_edges = _disk_edges(kind, type_)
            crossings = []
            for near, far in disk_edges:
                if kind == TRIANGLE:
                    distance = copy
                else:
                    distance = v.triangles(t, near) + layout.quad_depth(t, near, copy)
                crossings.append(layout.crossing(t, near, far, distance))
            keys = []
            directions = []
            for i in range(len(disk_edges)):
                c, u, w, face = _side(disk_edges[i], disk_edges[(i + 1) % len(disk_edges)])
                if kind == TRIANGLE:
                    distance = copy
                else:
                    distance = v.triangles(t, c) + layout.quad_depth(t, c, copy)
                key, end0 = _canonical_arc(tri, t, face, c, distance)
                keys.append(key)
                directions.append(1 if u == end0 else -1)
            disk = Disk(len(disks), t, kind, type_, copy, tuple(crossings), None, tuple(keys), tuple(directions))
            for corner, crossing in enumerate(crossings):
                if crossing in owner:
                    raise AssertionError('inconsistent stacking: crossing {} used twice'.format(crossing))
                owner[crossing] = (disk.index, corner)
            disks.append(disk)
    return disks, owner


def _canonical_arc(tri: Triangulation, t: int, face: int, corner: int, distance: int) -> Tuple[Tuple[int, int, int, int], int]:
    """Key of an arc on the first slot of its face class, and its end-0 vertex in (t, face) labels."""
    g = tri.gluing(t, face)
    if g is None or (t, face) < (g.tet, g.face):
        others = [x for x in face_vertices(face) if x != corner]
        return (t, face, corner, distance), min(others)
    there = g.perm[corner]
    others = [x for x in face_vertices(g.face) if x != there]
    back = inverse(g.perm)
    return (g.tet, g.face, there, distance), back[min(others)]


def _make_points(tri: Triangulation, skeleton: Skeleton, layout: _Layout,
        owner: Dict[Crossing, Tuple[int, int]]) -> Tuple[List[Point], Dict[Crossing, int]]:
    """Identify crossings around edge classes into points, and order each fan."""
    crossings = UnionFind(sorted(owner))
    for t, f in tri.slots():
        g = tri.gluing(t, f)
        if g is None:
            continue
        for a, b in edges():
            if f in (a, b):
                continue
            length = layout.edge_length(t, a, b)
            pa, pb = g.perm[a], g.perm[b]
            for pos in range(length):
                crossings.union((t, a, b, pos), layout.crossing(g.tet, pa, pb, pos))

    points = []
    point_of = {}
    for members in crossings.classes():
        fan, faces, closed = _walk_fan(tri, layout, members, owner)
        t, a, b, _ = members[0]
        # Faces are replaced by arc indices once arcs are numbered.
        points.append(Point(len(points), skeleton.edge_of(t, a, b), fan, faces, closed))
        for crossing in members:
            point_of[crossing] = len(points) - 1
    return points, point_of


def _walk_fan(tri: Triangulation, layout: _Layout, members: List[Crossing],
        owner: Dict[Crossing, Tuple[int, int]]) -> Tuple[Tuple[Tuple[int, int], ...], Tuple[Tuple[int, int], ...], bool]:
    """Order the disks around one point by walking from face to face.

    Returns the fan, the (entry face, exit face) of every fan disk in its own
    tetrahedron, and whether the fan closes up.
    """
    def through(crossing: Crossing, face: int) -> Optional[Tuple[Crossing, int]]:
        t, a, b, pos = crossing
        g = tri.gluing(t, face)
        if g is None:
            return None
        return layout.crossing(g.tet, g.perm[a], g.perm[b], pos), g.face

    def other_face(crossing: Crossing, face: int) -> int:
        first, second = edge_faces(crossing[1], crossing[2])
        return second if face == first else first

    start, exit_face, closed = members[0], edge_faces(members[0][1], members[0][2])[0], True
    for crossing in members:
        for face in edge_faces(crossing[1], crossing[2]):
            if tri.gluing(crossing[0], face) is None:
                start, exit_face, closed = crossing, other_face(crossing, face), False
                break
        if not closed:
            break

    fan = []
    faces = []
    current, face = start, exit_face
    for _ in range(len(members) + 1):
        fan.append(owner[current])
        faces.append((other_face(current, face), face))
        step = through(current, face)
        if step is None:
            break
        current, entered = step
        face = other_face(current, entered)
        if closed and (current, face) == (start, exit_face):
            break
    else:
        raise AssertionError('inconsistent stacking: fan at {} does not close'.format(start))

    if len(fan) != len(members) or len(set(fan)) != len(fan):
        raise AssertionError('inconsistent stacking: fan at {} covers {} of {} crossings'.format(
            start, len(fan), len(members)))
    return tuple(fan), tuple(faces), closed


def _make_arcs(tri: Triangulation, skeleton: Skeleton, layout: _Layout, disks: List[Disk],
        point_of: Dict[Crossing, int]) -> List[Arc]:
    """Number arcs by canonical key and attach the disk sides on both faces."""
    sides = {} # type: Dict[Tuple[int, int, int, int], List[Tuple[int, int, bool]]]
    for disk in disks:
        for side, key in enumerate(disk.arcs):
            t, face = key[0], key[1]
            canonical = disk.tet == t and _disk_face(disk, side) == face
            sides.setdefault(key, []).append((disk.index, side, canonical))

    arcs = []
    for face_class in skeleton.face_classes:
        t, f = face_class.slots[0]
        for c in face_vertices(f):
            d = min(x for x in face_vertices(f) if x != c)
            e = max(x for x in face_vertices(f) if x != c)
            for distance in range(layout.arc_count(t, f, c)):
                key = (t, f, c, distance)
                found = sorted(sides.get(key, []), key=lambda s: (not s[2], s[0], s[1]))
                expected = 1 if face_class.boundary else 2
                if len(found) != expected:
                    raise AssertionError('inconsistent stacking: arc {} has {} sides'.format(key, len(found)))
                ends = (point_of[layout.crossing(t, c, d, distance)], point_of[layout.crossing(t, c, e, distance)])
                arcs.append(Arc(len(arcs), t, f, c, distance, tuple((s[0], s[1]) for s in found), ends))
    return arcs


def _disk_face(disk: Disk, side: int) -> int:
    """The face of its tetrahedron holding one side of a disk."""
    disk_edges = _disk_edges(disk.kind, disk.type)
    return _side(disk_edges[side], disk_edges[(side + 1) % len(disk_edges)])[3]


def _arc_at(disk: Disk, corner: int, face: int) -> int:
    """The arc of a disk that leaves one of its corners through a face."""
    for side in ((corner - 1) % len(disk.arcs), corner):
        if _disk_face(disk, side) == face:
            return disk.arcs[side]
    raise AssertionError('inconsistent stacking: disk {} has no side in face {}'.format(disk.index, face))
