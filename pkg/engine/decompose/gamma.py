from collections import Counter
from logging import getLogger
from typing import Dict, List, Sequence, Tuple

from engine.log import LOGGER_NAME
logger = getLogger(LOGGER_NAME)

from engine.decompose.decomposition import Strong
from engine.errors import NormqError
from engine.normal.coords import QUAD
from engine.surface.complex import SurfaceComplex
from engine.surface.invariants import detect_vertex_linking


# A vertex of the graph is ('Q', disk index) or ('S', component index).
Vertex = Tuple[str, int]


class GammaGraph:
    """Quads and strongly connected triangle components, joined along shared arcs."""
    def __init__(self, q_vertices: Sequence[Vertex], s_vertices: Sequence[Vertex],
            edges: Sequence[Tuple[Vertex, Vertex, int]]):
        self.q_vertices = tuple(q_vertices)
        self.s_vertices = tuple(s_vertices)
        # (endpoint, endpoint, arc); Q-Q loops appear once with equal endpoints.
        self.edges = tuple(edges)

    def degrees(self) -> Dict[Vertex, int]:
        counts = Counter() # type: Dict[Vertex, int]
        for a, b, _ in self.edges:
            counts[a] += 1
            counts[b] += 1
        return {v: counts[v] for v in self.q_vertices + self.s_vertices}

    @property
    def q_degree_sum(self) -> int:
        degrees = self.degrees()
        return sum(degrees[v] for v in self.q_vertices)

    @property
    def loops(self) -> List[Tuple[Vertex, Vertex, int]]:
        return [e for e in self.edges if e[0] == e[1]]


def gamma_graph(surface: SurfaceComplex, components: Sequence[Strong]) -> GammaGraph:
    """Build the graph with one edge per arc shared by a quad and anything else."""
    if any(v is not None for v in detect_vertex_linking(surface, surface.skeleton)):
        raise NormqError('vertex-linking component present')
    logger.debug('building gamma graph - {}'.format(surface.vector))

    component_of = {d: c.index for c in components for d in c.triangles}

    def vertex(disk: int) -> Vertex:
        if surface.disks[disk].kind == QUAD:
            return 'Q', disk
        return 'S', component_of[disk]

    q_vertices = [('Q', d.index) for d in surface.disks if d.kind == QUAD]
    s_vertices = [('S', c.index) for c in components]
    edges = []
    for arc in surface.arcs:
        if len(arc.sides) != 2:
            continue
        ends = sorted(vertex(d) for d, _ in arc.sides)
        if ends[0][0] == 'S' and ends[1][0] == 'S':
            continue
        edges.append((ends[0], ends[1], arc.index))
    return GammaGraph(q_vertices, s_vertices, edges)
