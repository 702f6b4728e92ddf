from collections import Counter, namedtuple
from logging import getLogger
from typing import Dict, List, Optional, Sequence, Tuple

from engine.log import LOGGER_NAME
logger = getLogger(LOGGER_NAME)

from engine.normal.coords import QUAD, TRIANGLE
from engine.surface.complex import Point, SurfaceComplex
from engine.unionfind import UnionFind


# A strongly connected component of the triangle part; `vertices` holds every
# vertex class its triangles link (a single one unless something is wrong).
Strong = namedtuple('Strong', ('index', 'triangles', 'vertices'))

# One component of A': the split triangle part.
PrimeComponent = namedtuple('PrimeComponent', ('index', 'triangles', 'chi', 'boundary_circles', 'orientable'))

Weights = namedtuple('Weights', ('total', 'boundary', 'arcs'))


class APrime:
    """The triangle part with every singular point split into one point per triangle run."""
    def __init__(self, point_count: int, arc_count: int, components: Sequence[PrimeComponent]):
        self.point_count = point_count
        self.arc_count = arc_count
        self.components = tuple(components)

    @property
    def disk_count(self) -> int:
        return sum(len(c.triangles) for c in self.components)

    @property
    def chi(self) -> int:
        return self.point_count - self.arc_count + self.disk_count

    @property
    def boundary_circles(self) -> int:
        return sum(c.boundary_circles for c in self.components)

    def __len__(self) -> int:
        return len(self.components)


def linked_vertex(component: Strong) -> Optional[int]:
    """The vertex class linked by a strongly connected component, if unique."""
    return next(iter(component.vertices)) if len(component.vertices) == 1 else None


def triangle_runs(kinds: Sequence[str], closed: bool) -> List[List[int]]:
    """Maximal runs of triangles in a fan, as lists of fan positions.

    A closed fan is cyclic: a run may wrap around its end. A fan made only of
    triangles is one run.
    """
    n = len(kinds)
    if n == 0:
        return []
    if closed and all(k == TRIANGLE for k in kinds):
        return [list(range(n))]
    start = 0
    if closed:
        # Begin just after a non-triangle so no run is cut in two.
        start = next(i for i in range(n) if kinds[i] != TRIANGLE) + 1
    runs = []
    current = [] # type: List[int]
    for step in range(n):
        i = (start + step) % n
        if kinds[i] == TRIANGLE:
            current.append(i)
        elif current:
            runs.append(current)
            current = []
    if current:
        runs.append(current)
    return runs


def _fan_runs(surface: SurfaceComplex, point: Point) -> List[List[int]]:
    return triangle_runs([surface.disks[d].kind for d, _ in point.fan], point.closed)


def singular_points(surface: SurfaceComplex) -> Tuple[int, ...]:
    """Points of the triangle part around which the triangles do not form one fan."""
    omega = tuple(p.index for p in surface.points if len(_fan_runs(surface, p)) >= 2)
    logger.debug('singular points - {}'.format(list(omega)))
    return omega


def _arc_end(surface: SurfaceComplex, disk: int, side: int, corner: int) -> Tuple[int, int]:
    """(arc, end) where side `side` of a disk meets the disk's corner `corner`."""
    d = surface.disks[disk]
    arc = d.arcs[side]
    forward = d.directions[side] == 1
    # Side i runs from corner i to corner i+1.
    if side == corner:
        return arc, 0 if forward else 1
    return arc, 1 if forward else 0


def _link_graph(surface: SurfaceComplex, point: Point) -> UnionFind:
    """The link of a point in the triangle part: arc ends joined by triangle corners."""
    link = UnionFind()
    for d, c in point.fan:
        disk = surface.disks[d]
        if disk.kind != TRIANGLE:
            continue
        before = _arc_end(surface, d, (c - 1) % len(disk.arcs), c)
        after = _arc_end(surface, d, c, c)
        link.add(before)
        link.add(after)
        link.union(before, after)
    return link


def singular_points_by_link(surface: SurfaceComplex) -> Tuple[int, ...]:
    """Singular points recomputed from link connectivity instead of fan order."""
    return tuple(p.index for p in surface.points if _link_graph(surface, p).count() >= 2)


def split_A(surface: SurfaceComplex, omega: Sequence[int]) -> APrime:
    """Split each singular point once per triangle run and measure the result."""
    singular = set(omega)
    triangles = [d.index for d in surface.disks if d.kind == TRIANGLE]
    arcs = [a for a in surface.arcs if any(surface.disks[d].kind == TRIANGLE for d, _ in a.sides)]

    # Each triangle corner sits at one copy of its point: (point, link root).
    links = {p: _link_graph(surface, surface.points[p]) for p in singular}

    def copy_at(disk: int, side: int, corner: int) -> Tuple[int, object]:
        point = surface.disks[disk].corners[corner]
        if point not in singular:
            return point, None
        return point, links[point].root(_arc_end(surface, disk, side, corner))

    cells = UnionFind()
    copies = set()
    for d in triangles:
        disk = surface.disks[d]
        cells.add(('disk', d))
        for corner in range(len(disk.corners)):
            copy = copy_at(d, corner, corner)
            copies.add(copy)
            cells.add(('point', copy))
            cells.union(('disk', d), ('point', copy))
        for side in range(len(disk.arcs)):
            cells.add(('arc', disk.arcs[side]))
            cells.union(('disk', d), ('arc', disk.arcs[side]))

    # Boundary arcs of A' have exactly one triangle side; circles run through point copies.
    circles = UnionFind()
    boundary_copies = set()
    for arc in arcs:
        tri_sides = [(d, s) for d, s in arc.sides if surface.disks[d].kind == TRIANGLE]
        if len(tri_sides) != 1:
            continue
        d, s = tri_sides[0]
        n = len(surface.disks[d].corners)
        ends = [copy_at(d, s, s), copy_at(d, s, (s + 1) % n)]
        for end in ends:
            circles.add(end)
            boundary_copies.add(end)
        circles.union(ends[0], ends[1])

    orientation = UnionFind(triangles)
    for arc in arcs:
        if len(arc.sides) == 2 and all(surface.disks[d].kind == TRIANGLE for d, _ in arc.sides):
            (d1, s1), (d2, s2) = arc.sides
            same = surface.disks[d1].directions[s1] == surface.disks[d2].directions[s2]
            orientation.union(d1, d2, 1 if same else 0)

    groups = {} # type: Dict[object, List[int]]
    for d in triangles:
        groups.setdefault(cells.root(('disk', d)), []).append(d)
    point_roots = Counter(cells.root(('point', c)) for c in copies)
    arc_roots = Counter(cells.root(('arc', a.index)) for a in arcs)
    circle_roots = {circles.root(c) for c in boundary_copies}
    circle_count = Counter(cells.root(('point', c)) for c in circle_roots)

    components = []
    for root, members in sorted(groups.items(), key=lambda item: item[1][0]):
        components.append(PrimeComponent(
            index=len(components),
            triangles=tuple(members),
            chi=point_roots[root] - arc_roots[root] + len(members),
            boundary_circles=circle_count[root],
            orientable=not orientation.is_twisted(members[0])
        ))
    return APrime(len(copies), len(arcs), components)


def weights(surface: SurfaceComplex) -> Weights:
    """Edge weights of the quad part: 1 on its boundary, 2 inside."""
    per_arc = {}
    for arc in surface.arcs:
        quad_sides = sum(1 for d, _ in arc.sides if surface.disks[d].kind == QUAD)
        if quad_sides:
            per_arc[arc.index] = quad_sides
    boundary = sum(1 for w in per_arc.values() if w == 1)
    return Weights(sum(per_arc.values()), boundary, per_arc)


def strongly_connected_components(surface: SurfaceComplex, strict: bool=True) -> List[Strong]:
    """Triangles chained by shared arcs, with the vertex classes they link."""
    triangles = [d.index for d in surface.disks if d.kind == TRIANGLE]
    joined = UnionFind(triangles)
    for arc in surface.arcs:
        if len(arc.sides) == 2 and all(surface.disks[d].kind == TRIANGLE for d, _ in arc.sides):
            joined.union(arc.sides[0][0], arc.sides[1][0])

    skeleton = surface.skeleton
    result = []
    for members in joined.classes():
        vertices = frozenset(skeleton.vertex_of(surface.disks[d].tet, surface.disks[d].type) for d in members)
        if strict and len(vertices) != 1:
            raise AssertionError('unexpected mixed linked vertices in one component: {}'.format(sorted(vertices)))
        result.append(Strong(len(result), tuple(members), vertices))
    return result


def b_prime_chi(surface: SurfaceComplex, omega: Sequence[int]) -> int:
    """Euler characteristic of B' counted directly from its cells.

    B' is the quad part with a small disk added at each singular point. Each
    added disk meets the quad part in a cone on its quad runs and leaves the
    count unchanged, so only the quad cells are counted.
    """
    quads = [d for d in surface.disks if d.kind == QUAD]
    points = {p for d in quads for p in d.corners}
    arcs = {a for d in quads for a in d.arcs}
    for p in omega:
        if p not in points:
            raise AssertionError('unexpected singular point outside the quad part: {}'.format(p))
    return len(points) - len(arcs) + len(quads)


def frontier_circles(surface: SurfaceComplex) -> int:
    """Circles of the boundary of B' (equal to that of A'), traced from fan order.

    At every point each triangle run is bounded by an entering and a leaving
    arc; the boundary of B' passes from one to the other around the point.
    """
    joined = UnionFind()
    for point in surface.points:
        for run in _fan_runs(surface, point):
            if point.closed and len(run) == len(point.fan):
                continue
            first = point.sides[run[0]][0]
            last = point.sides[run[-1]][1]
            joined.add(first)
            joined.add(last)
            joined.union(first, last)
    return joined.count()


class Decomposition:
    """The triangle/quad decomposition of a normal surface and its statistics."""
    def __init__(self, surface: SurfaceComplex):
        logger.debug('decomposing surface - {}'.format(surface.vector))
        self.surface = surface
        self.triangles = tuple(d.index for d in surface.disks if d.kind == TRIANGLE)
        self.quads = tuple(d.index for d in surface.disks if d.kind == QUAD)
        self.omega = singular_points(surface)
        self.a_prime = split_A(surface, self.omega)
        self.weights = weights(surface)
        self.components = strongly_connected_components(surface, strict=False)
        self.b_prime_direct = b_prime_chi(surface, self.omega)
        self.frontier_circles = frontier_circles(surface)

    @property
    def chi_a_prime(self) -> int:
        return self.a_prime.chi

    @property
    def chi_b_prime(self) -> int:
        """chi(F) - chi(A'), valid when A' and B' meet in circles."""
        return self.surface.euler_characteristic - self.a_prime.chi

    @property
    def has_quads(self) -> bool:
        return len(self.quads) > 0

    def stats(self) -> Dict[str, int]:
        return {
            'a_prime_components': len(self.a_prime),
            'a_prime_boundary': self.a_prime.boundary_circles,
            'chi_a_prime': self.a_prime.chi,
            'chi_b_prime': self.chi_b_prime,
            'chi_b_prime_direct': self.b_prime_direct,
            'b_prime_boundary': self.frontier_circles,
            'singular_points': len(self.omega),
            'weight_b': self.weights.total,
            'weight_boundary_b': self.weights.boundary,
            'strong_components': len(self.components)
        }


def decompose(surface: SurfaceComplex) -> Decomposition:
    return Decomposition(surface)
