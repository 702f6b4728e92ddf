from collections import namedtuple
from logging import getLogger
from typing import Dict, List, Optional, Sequence

from engine.log import LOGGER_NAME
logger = getLogger(LOGGER_NAME)

from engine.context import context
from engine.decompose.decomposition import Decomposition, linked_vertex, singular_points_by_link
from engine.decompose.gamma import gamma_graph
from engine.errors import NormqError
from engine.normal.coords import NormalVector
from engine.normal.matching import MatchingSystem
from engine.surface.complex import build_surface
from engine.surface.invariants import SurfaceInvariants, classification_consistent, invariants
from engine.topology.skeleton import Skeleton, max_vertex_degree
from engine.topology.triangulation import Triangulation


# `holds` is None when the check's hypothesis excludes the surface. A failing
# check with `hard` set is a violation; soft failures are reported only.
Check = namedtuple('Check', ('name', 'holds', 'margin', 'hard', 'caveats'))

THEOREM1 = 'theorem1'
GENUS_BOUND = 'genus_bound'
THEOREM2 = 'theorem2'
CLAIM1 = 'claim1'
CLAIM2 = 'claim2'
LEMMA1 = 'lemma1'
LEMMA2 = 'lemma2'
PROOF_CHAIN = 'proof_chain'
EULER_SPLIT = 'euler_split'
FRONTIER = 'frontier_circles'
WEIGHT = 'weight'
PLANAR = 'planar_components'
REMARK = 'vertex_link_remark'
SINGULAR = 'singular_oracle'
GAMMA = 'gamma_counting'
ROUND_TRIP = 'round_trip'
CLASSIFICATION = 'classification'

CHECKS = (THEOREM1, GENUS_BOUND, THEOREM2, CLAIM1, CLAIM2, LEMMA1, LEMMA2, PROOF_CHAIN, EULER_SPLIT,
          FRONTIER, WEIGHT, PLANAR, REMARK, SINGULAR, GAMMA, ROUND_TRIP, CLASSIFICATION)

F_NOT_CLOSED = 'F not closed'
M_NOT_CLOSED = 'M not closed'
NOT_CLOSED_HYPOTHESIS = 'hypothesis: closed'


def _not_applicable(name: str, caveats: Sequence[str]=()) -> Check:
    return Check(name, None, None, False, tuple(caveats))


def check_theorem1(inv: SurfaceInvariants) -> List[Check]:
    """chi >= 2 - 7Q, and 2g <= 7Q for an oriented, closed, connected surface."""
    if inv.is_empty:
        raise NormqError('vacuous (F = ∅)')
    chi, q = inv.chi, inv.quad_count
    closed_m = inv.surface.skeleton.is_closed
    caveats = []
    if not inv.is_closed:
        caveats.append(F_NOT_CLOSED)
    if not closed_m:
        caveats.append(M_NOT_CLOSED)
    margin = chi - (2 - 7 * q)
    theorem = Check(THEOREM1, margin >= 0, margin, inv.is_closed and closed_m, tuple(caveats))

    if inv.is_connected and inv.is_closed and inv.is_orientable:
        genus = inv.components[0].genus
        slack = 7 * q - 2 * genus
        genus_check = Check(GENUS_BOUND, slack >= 0, slack, closed_m, tuple(caveats))
    else:
        genus_check = _not_applicable(GENUS_BOUND)
    return [theorem, genus_check]


def check_theorem2(inv: SurfaceInvariants, n: int) -> Check:
    """T <= 4NQ for surfaces with no vertex-linking component."""
    if inv.has_vertex_linking:
        return _not_applicable(THEOREM2, ('vertex-linking component',))
    closed_m = inv.surface.skeleton.is_closed
    margin = 4 * n * inv.quad_count - inv.triangle_count
    return Check(THEOREM2, margin >= 0, margin, closed_m, () if closed_m else (M_NOT_CLOSED,))


def check_decomposition(inv: SurfaceInvariants, dec: Decomposition) -> List[Check]:
    """Claims and lemmas of the triangle/quad decomposition."""
    surface = inv.surface
    skeleton = surface.skeleton
    q = inv.quad_count
    closed = inv.is_closed
    caveats = () if closed else (NOT_CLOSED_HYPOTHESIS,)
    a_count = len(dec.a_prime)
    a_boundary = dec.a_prime.boundary_circles
    chi_a = dec.a_prime.chi
    checks = []

    expected = 2 * a_count - a_boundary
    checks.append(Check(CLAIM1, chi_a == expected, chi_a - expected, closed, caveats))
    lemma1 = 2 * a_count - 4 * q
    checks.append(Check(LEMMA1, chi_a >= lemma1, chi_a - lemma1, closed, caveats))
    checks.append(Check(EULER_SPLIT, dec.chi_b_prime == dec.b_prime_direct,
                        dec.chi_b_prime - dec.b_prime_direct, closed, caveats))
    checks.append(Check(FRONTIER, a_boundary == dec.frontier_circles,
                        a_boundary - dec.frontier_circles, closed, caveats))

    if q > 0:
        checks.append(Check(CLAIM2, 4 * q >= a_boundary, 4 * q - a_boundary, closed, caveats))
        omega = len(dec.omega)
        lemma2 = omega - 3 * q if omega > 0 else 4 - 3 * q
        checks.append(Check(LEMMA2, dec.chi_b_prime >= lemma2, dec.chi_b_prime - lemma2, closed, caveats))
        bound = lemma1 + lemma2
        chain = inv.chi >= bound and bound >= 2 - 7 * q
        checks.append(Check(PROOF_CHAIN, chain, inv.chi - bound, closed, caveats))
    else:
        for name in (CLAIM2, LEMMA2, PROOF_CHAIN):
            checks.append(_not_applicable(name, ('no quads',)))

    checks.append(Check(WEIGHT, dec.weights.total == 4 * q, dec.weights.total - 4 * q, True, ()))

    # Every strongly connected component links one vertex, has at most N_v
    # triangles, and splits off a planar piece of A'.
    planar = True
    slack = None # type: Optional[int]
    pieces = {c.triangles[0]: c for c in dec.a_prime.components}
    for component in dec.components:
        vertex = linked_vertex(component)
        piece = pieces.get(component.triangles[0])
        if vertex is None or piece is None or piece.triangles != component.triangles:
            planar = False
            continue
        room = skeleton.corner_count(vertex) - len(component.triangles)
        slack = room if slack is None else min(slack, room)
        if room < 0 or not piece.orientable or piece.chi != 2 - piece.boundary_circles:
            planar = False
    checks.append(Check(PLANAR, planar, slack, True, ()))

    checks.append(Check(SINGULAR, tuple(dec.omega) == singular_points_by_link(surface), None, True, ()))

    if q > 0 and not inv.has_vertex_linking:
        graph = gamma_graph(surface, dec.components)
        s_count = len(graph.s_vertices)
        degrees_ok = not closed or all(d == 4 for v, d in graph.degrees().items() if v[0] == 'Q')
        counting = degrees_ok and graph.q_degree_sum <= 4 * q and 4 * q >= s_count
        checks.append(Check(GAMMA, counting, 4 * q - s_count, closed, caveats))
    else:
        checks.append(_not_applicable(GAMMA))
    return checks


def check_surface(inv: SurfaceInvariants) -> List[Check]:
    """Reconstruction and classification consistency."""
    surface = inv.surface
    checks = [Check(ROUND_TRIP, surface.read_vector() == surface.vector, None, True, ())]
    consistent = all(classification_consistent(surface, c) for c in inv.components)
    checks.append(Check(CLASSIFICATION, consistent, None, True, ()))
    # A closed connected all-triangle component must be a vertex link.
    missed = [c.index for c in inv.components
              if c.boundary_circles == 0 and c.quad_count == 0 and not c.vertex_linking]
    checks.append(Check(REMARK, not missed, None, True, ()))
    return checks


class TheoremReport:
    """Per-surface record: invariants, decomposition and every check."""
    def __init__(self, vector: NormalVector, inv: SurfaceInvariants, decomposition: Optional[Decomposition],
            n: int, checks: Sequence[Check]):
        self.vector = vector
        self.invariants = inv
        self.decomposition = decomposition
        self.n = n
        self.checks = tuple(checks)

    @property
    def vacuous(self) -> bool:
        return self.invariants.is_empty

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise NormqError('no such check: {}'.format(name))

    @property
    def violations(self) -> List[Check]:
        """Hard checks that failed."""
        return [c for c in self.checks if c.hard and c.holds is False]

    @property
    def soft_failures(self) -> List[Check]:
        return [c for c in self.checks if not c.hard and c.holds is False]

    @property
    def hypotheses(self) -> Dict[str, bool]:
        return {
            'closed_manifold': self.invariants.surface.skeleton.is_closed,
            'closed_surface': self.invariants.is_closed,
            'nonempty': not self.invariants.is_empty
        }


@context(vector='v')
def report_surface(tri: Triangulation, skeleton: Skeleton, v: NormalVector,
        system: Optional[MatchingSystem]=None) -> TheoremReport:
    """Build the surface of v and run every check on it."""
    surface = build_surface(tri, skeleton, v, system)
    inv = invariants(surface)
    n = max_vertex_degree(skeleton)
    if inv.is_empty:
        logger.debug('empty surface, checks skipped')
        return TheoremReport(v, inv, None, n, [])
    dec = Decomposition(surface)
    checks = check_theorem1(inv) + [check_theorem2(inv, n)] + check_decomposition(inv, dec) + check_surface(inv)
    return TheoremReport(v, inv, dec, n, checks)
