from collections import Counter, namedtuple
from logging import getLogger
from typing import Dict, FrozenSet, List, Sequence, Set, Tuple

from engine.log import LOGGER_NAME
logger = getLogger(LOGGER_NAME)

from engine.errors import NormqError
from engine.normal.coords import (DISKS_PER_TET, QUAD, TRIANGLE, DiskType, NormalVector, coordinate,
                                  disk_types, quad_pairs, quad_separating)
from engine.topology.perm import face_vertices
from engine.topology.skeleton import Skeleton
from engine.topology.triangulation import Triangulation


# One equation: the sum of coefficient * coordinate is zero. `corner` is the
# vertex (of the face class's first slot) linked by the arc type.
Row = namedtuple('Row', ('face_class', 'corner', 'coefficients', 'trivial'))


class MatchingSystem:
    """The matching equations of a triangulation."""
    def __init__(self, tet_count: int, rows: Sequence[Row]):
        self.tet_count = tet_count
        self.rows = tuple(rows)

    @property
    def width(self) -> int:
        return DISKS_PER_TET * self.tet_count

    @property
    def trivial_rows(self) -> List[Row]:
        return [r for r in self.rows if r.trivial]

    def __len__(self) -> int:
        return len(self.rows)


def build_matching_system(tri: Triangulation, skeleton: Skeleton) -> MatchingSystem:
    """One equation per interior face class and arc type."""
    logger.debug('building matching equations - {}'.format(tri.name))
    rows = []
    for face in skeleton.interior_faces:
        t, f = face.slots[0]
        g = tri.gluing(t, f)
        for a in face_vertices(f):
            b = g.perm[a]
            coefficients = Counter() # type: Dict[int, int]
            coefficients[coordinate(DiskType(t, TRIANGLE, a))] += 1
            coefficients[coordinate(DiskType(t, QUAD, quad_separating(a, f)))] += 1
            coefficients[coordinate(DiskType(g.tet, TRIANGLE, b))] -= 1
            coefficients[coordinate(DiskType(g.tet, QUAD, quad_separating(b, g.face)))] -= 1
            terms = tuple(sorted((i, c) for i, c in coefficients.items() if c != 0))
            if not terms:
                logger.debug('trivial matching row - face class {}, corner {}'.format(face.index, a))
            rows.append(Row(face.index, a, terms, len(terms) == 0))
    return MatchingSystem(tri.tet_count, rows)


def evaluate(row: Row, v: NormalVector) -> int:
    return sum(coef * v[index] for index, coef in row.coefficients)


def satisfies_matching(v: NormalVector, system: MatchingSystem) -> bool:
    """Whether every matching equation vanishes on v."""
    if len(v) != system.width:
        raise NormqError('vector has {} entries, expected {}'.format(len(v), system.width))
    return all(evaluate(row, v) == 0 for row in system.rows)


def arcs_cut(disk: DiskType) -> Set[Tuple[int, int]]:
    """The (face, linked corner) arcs a disk type leaves in the faces of its tetrahedron."""
    arcs = set()
    if disk.kind == TRIANGLE:
        for f in range(4):
            if f != disk.index:
                arcs.add((f, disk.index))
    else:
        for f in range(4):
            # In face f the quad separates one face corner from the other two.
            for c in face_vertices(f):
                others = [x for x in face_vertices(f) if x != c]
                same_side = [pair for pair in quad_pairs(disk.index) if others[0] in pair and others[1] in pair]
                if same_side:
                    arcs.add((f, c))
    return arcs


def arc_incidence_rows(tri: Triangulation, skeleton: Skeleton) -> FrozenSet[Tuple[Tuple[int, int], ...]]:
    """Matching rows rebuilt by listing, for every disk type, the arcs it cuts."""
    cutting = {} # type: Dict[Tuple[int, int, int], List[DiskType]]
    for t in range(tri.tet_count):
        for disk in disk_types(t):
            for f, c in arcs_cut(disk):
                cutting.setdefault((t, f, c), []).append(disk)
    rows = []
    for face in skeleton.interior_faces:
        t, f = face.slots[0]
        g = tri.gluing(t, f)
        for c in face_vertices(f):
            coefficients = Counter() # type: Dict[int, int]
            for disk in cutting.get((t, f, c), []):
                coefficients[coordinate(disk)] += 1
            for disk in cutting.get((g.tet, g.face, g.perm[c]), []):
                coefficients[coordinate(disk)] -= 1
            rows.append(tuple(sorted((i, k) for i, k in coefficients.items() if k != 0)))
    return normalized_rows(rows)


def normalized_rows(rows) -> FrozenSet[Tuple[Tuple[int, int], ...]]:
    """Rows as a set, each signed so its first coefficient is positive."""
    result = set()
    for row in rows:
        terms = row.coefficients if isinstance(row, Row) else row
        if terms and terms[0][1] < 0:
            terms = tuple((i, -c) for i, c in terms)
        result.add(tuple(terms))
    return frozenset(result)
