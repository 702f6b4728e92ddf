from collections import namedtuple
from logging import getLogger
from typing import Dict, List, Optional, Tuple

from engine.log import LOGGER_NAME
logger = getLogger(LOGGER_NAME)

from engine.errors import NormqError
from engine.topology.perm import edges, face_edges, face_vertices
from engine.topology.triangulation import Triangulation
from engine.unionfind import UnionFind


# A corner is (tet, vertex); an edge slot is (tet, a, b) with a < b; a face
# slot is (tet, face).
VertexClass = namedtuple('VertexClass', ('index', 'corners', 'boundary', 'link_euler', 'link_ok'))
EdgeClass = namedtuple('EdgeClass', ('index', 'slots', 'boundary', 'reversed'))
FaceClass = namedtuple('FaceClass', ('index', 'slots', 'boundary'))


class Skeleton:
    """Vertex, edge and face classes of a triangulation."""
    def __init__(self, tri: Triangulation, vertices: List[VertexClass], edges: List[EdgeClass], faces: List[FaceClass]):
        self.triangulation = tri
        self.vertex_classes = tuple(vertices)
        self.edge_classes = tuple(edges)
        self.face_classes = tuple(faces)
        self._vertex_of = {c: v.index for v in vertices for c in v.corners}
        self._edge_of = {s: e.index for e in edges for s in e.slots}

    def vertex_of(self, tet: int, vertex: int) -> int:
        """Index of the vertex class of a corner."""
        return self._vertex_of[tet, vertex]

    def edge_of(self, tet: int, a: int, b: int) -> int:
        """Index of the edge class of an edge slot."""
        a, b = min(a, b), max(a, b)
        return self._edge_of[tet, a, b]

    def vertex_class(self, index: int) -> VertexClass:
        if isinstance(index, int) and 0 <= index < len(self.vertex_classes):
            return self.vertex_classes[index]
        raise NormqError('unknown vertex class: {}'.format(index))

    def edge_degree(self, index: int) -> int:
        return len(self.edge_classes[index].slots)

    def corner_count(self, index: int) -> int:
        """N_v: tetrahedron corners in a vertex class."""
        return len(self.vertex_classes[index].corners)

    @property
    def interior_faces(self) -> List[FaceClass]:
        return [f for f in self.face_classes if not f.boundary]

    @property
    def is_closed(self) -> bool:
        return all(not f.boundary for f in self.face_classes)

    @property
    def euler_characteristic(self) -> int:
        """V - E + F - T of the triangulation."""
        return (len(self.vertex_classes) - len(self.edge_classes)
                + len(self.face_classes) - self.triangulation.tet_count)

    @property
    def reversed_edges(self) -> List[int]:
        return [e.index for e in self.edge_classes if e.reversed]

    @property
    def irregular_vertices(self) -> List[int]:
        """Vertex classes whose link is neither a sphere nor a disk."""
        return [v.index for v in self.vertex_classes if not v.link_ok]


def compute_skeleton(tri: Triangulation) -> Skeleton:
    """Identify vertices, edges and faces under the gluings."""
    logger.debug('building skeleton - {}'.format(tri.name))
    n = tri.tet_count

    corners = UnionFind((t, v) for t in range(n) for v in range(4))
    slots = UnionFind((t, a, b) for t in range(n) for a, b in edges())
    # An edge end is (tet, v, w): the end at v of edge {v, w}.
    ends = UnionFind((t, v, w) for t in range(n) for v in range(4) for w in range(4) if v != w)
    # A link edge is (tet, v, f): the corner of face f at vertex v.
    link_edges = UnionFind((t, v, f) for t in range(n) for f in range(4) for v in face_vertices(f))

    for t, f in tri.slots():
        g = tri.gluing(t, f)
        if g is None:
            continue
        p = g.perm
        for v in face_vertices(f):
            corners.union((t, v), (g.tet, p[v]))
            link_edges.union((t, v, f), (g.tet, p[v], g.face))
        for a, b in face_edges(f):
            pa, pb = p[a], p[b]
            flipped = 1 if pa > pb else 0
            slots.union((t, a, b), (g.tet, min(pa, pb), max(pa, pb)), flipped)
            ends.union((t, a, b), (g.tet, pa, pb))
            ends.union((t, b, a), (g.tet, pb, pa))

    boundary_faces = {(t, f) for t, f in tri.slots() if tri.gluing(t, f) is None}
    boundary_corners = {(t, v) for t, f in boundary_faces for v in face_vertices(f)}
    boundary_slots = {(t, a, b) for t, f in boundary_faces for a, b in face_edges(f)}

    faces = []
    seen = set()
    for t, f in tri.slots():
        if (t, f) in seen:
            continue
        g = tri.gluing(t, f)
        members = [(t, f)] if g is None else sorted([(t, f), (g.tet, g.face)])
        seen.update(members)
        faces.append(FaceClass(len(faces), tuple(members), g is None))

    edge_list = []
    for members in slots.classes():
        edge_list.append(EdgeClass(
            index=len(edge_list),
            slots=tuple(members),
            boundary=any(s in boundary_slots for s in members),
            reversed=slots.is_twisted(members[0])
        ))

    vertex_list = []
    for members in corners.classes():
        boundary = any(c in boundary_corners for c in members)
        euler = _link_euler(members, ends, link_edges)
        vertex_list.append(VertexClass(
            index=len(vertex_list),
            corners=tuple(members),
            boundary=boundary,
            link_euler=euler,
            link_ok=euler == (1 if boundary else 2)
        ))

    skeleton = Skeleton(tri, vertex_list, edge_list, faces)
    logger.debug('skeleton has {} vertices, {} edges, {} faces'.format(
        len(vertex_list), len(edge_list), len(faces)))
    return skeleton


def _link_euler(corners: List[Tuple[int, int]], ends: UnionFind, link_edges: UnionFind) -> int:
    """Euler characteristic of the link of one vertex class."""
    vertices = {ends.root((t, v, w)) for t, v in corners for w in range(4) if w != v}
    link_edge_roots = {link_edges.root((t, v, f)) for t, v in corners for f in range(4) if f != v}
    return len(vertices) - len(link_edge_roots) + len(corners)


def max_vertex_degree(skeleton: Skeleton) -> int:
    """N: the largest corner count of any vertex class."""
    return max(len(v.corners) for v in skeleton.vertex_classes)
