from concurrent.futures import ProcessPoolExecutor
from itertools import product
from logging import getLogger
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from engine.log import LOGGER_NAME
logger = getLogger(LOGGER_NAME)

from engine.errors import NormqError
from engine.normal.coords import DISKS_PER_TET, NormalVector, is_admissible
from engine.normal.matching import MatchingSystem, satisfies_matching
from engine.topology.skeleton import Skeleton
from engine.topology.triangulation import Triangulation


DEFAULT_WORK_BUDGET = 50000000

ALL_SUMMANDS = 'all non-negative solutions'
ADMISSIBLE_SUMMANDS = 'admissible solutions'

Terms = Tuple[Tuple[int, int], ...]


class EnumerationConfig:
    """Bounds and switches for an enumeration."""
    def __init__(self, max_coordinate: int=1, fundamental_only: bool=False, include_zero: bool=False,
            admissible_summands: bool=False, work_budget: int=DEFAULT_WORK_BUDGET, jobs: int=1):
        if max_coordinate < 1:
            raise NormqError('max coordinate must be at least 1: {}'.format(max_coordinate))
        if work_budget < 1:
            raise NormqError('work budget must be positive: {}'.format(work_budget))
        if jobs < 1:
            raise NormqError('jobs must be positive: {}'.format(jobs))
        self.max_coordinate = max_coordinate
        self.fundamental_only = fundamental_only
        self.include_zero = include_zero
        self.admissible_summands = admissible_summands
        self.work_budget = work_budget
        self.jobs = jobs

    @property
    def summands(self) -> str:
        """Which solutions count as summands when testing fundamentality."""
        return ADMISSIBLE_SUMMANDS if self.admissible_summands else ALL_SUMMANDS

    def describe(self) -> Dict[str, object]:
        return {
            'max_coordinate': self.max_coordinate,
            'fundamental_only': self.fundamental_only,
            'include_zero': self.include_zero,
            'fundamental_summands': self.summands,
            'work_budget': self.work_budget
        }


def local_patterns(bound: int) -> List[Tuple[int, ...]]:
    """Admissible coordinates of one tetrahedron with entries in [0, bound], in lexicographic order."""
    quads = [(0, 0, 0)]
    for k in range(3):
        for q in range(1, bound + 1):
            quads.append(tuple(q if i == k else 0 for i in range(3)))
    patterns = [triangles + quad for triangles in product(range(bound + 1), repeat=4) for quad in quads]
    return sorted(patterns)


def estimated_work(tet_count: int, bound: int) -> int:
    """Leaves of the pruned search tree: ((B+1)^4 * (1+3B))^t."""
    return ((bound + 1) ** 4 * (1 + 3 * bound)) ** tet_count


def _rows_by_tet(system: MatchingSystem) -> List[List[Terms]]:
    """Group non-trivial rows by the last tetrahedron they mention."""
    grouped = [[] for _ in range(system.tet_count)] # type: List[List[Terms]]
    for row in system.rows:
        if row.trivial:
            continue
        last = max(index for index, _ in row.coefficients) // DISKS_PER_TET
        grouped[last].append(row.coefficients)
    return grouped


def _search(patterns: Sequence[Sequence[Tuple[int, ...]]], rows: List[List[Terms]],
        prefix: Tuple[int, ...]=()) -> Iterator[Tuple[int, ...]]:
    """Depth-first search over tetrahedra; a row is checked once its last tetrahedron is set."""
    tet_count = len(rows)
    stack = [prefix]
    # Reverse pushes keep output in lexicographic order.
    while stack:
        partial = stack.pop()
        t = len(partial) // DISKS_PER_TET
        if t > 0 and not all(sum(c * partial[i] for i, c in terms) == 0 for terms in rows[t - 1]):
            continue
        if t == tet_count:
            yield partial
            continue
        for pattern in reversed(patterns[t]):
            stack.append(partial + tuple(pattern))


def _search_subtree(args) -> List[Tuple[int, ...]]:
    patterns, rows, prefix = args
    return list(_search(patterns, rows, prefix))


def enumerate_admissible(tri: Triangulation, skeleton: Skeleton, system: MatchingSystem,
        config: EnumerationConfig) -> List[NormalVector]:
    """All admissible solutions with entries in [0, B], in lexicographic order."""
    bound = config.max_coordinate
    work = estimated_work(tri.tet_count, bound)
    logger.debug('enumerating solutions - {} leaves, budget {}'.format(work, config.work_budget))
    if work > config.work_budget:
        raise NormqError('work budget exceeded: {} candidate leaves, budget {}'.format(work, config.work_budget))

    rows = _rows_by_tet(system)
    patterns = [local_patterns(bound)] * tri.tet_count
    if config.jobs > 1:
        tasks = [(patterns, rows, tuple(p)) for p in patterns[0]]
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            found = [v for chunk in pool.map(_search_subtree, tasks) for v in chunk]
        found.sort()
    else:
        found = list(_search(patterns, rows))

    solutions = [NormalVector(v) for v in found]
    if not config.include_zero:
        solutions = [v for v in solutions if not v.is_zero]
    if config.fundamental_only:
        solutions = [v for v in solutions if not v.is_zero
                     and is_fundamental(v, system, solutions, config.admissible_summands)]
    logger.debug('found {} solutions'.format(len(solutions)))
    return solutions


def solutions_below(v: NormalVector, system: MatchingSystem) -> Iterator[NormalVector]:
    """Every non-negative solution u <= v entrywise, in lexicographic order."""
    rows = _rows_by_tet(system)
    patterns = []
    for t in range(v.tet_count):
        patterns.append(list(product(*(range(x + 1) for x in v.tet(t)))))
    for u in _search(patterns, rows):
        yield NormalVector(u)


def is_fundamental(v: NormalVector, system: MatchingSystem, solutions: Optional[Iterable[NormalVector]]=None,
        admissible_summands: bool=False) -> bool:
    """Whether v is not the sum of two nonzero non-negative solutions.

    `solutions`, when given, is tried first as a source of summands; the
    exhaustive search below v decides the remaining cases.
    """
    if v.is_zero or not satisfies_matching(v, system):
        return False

    def splits(u: NormalVector) -> bool:
        if u.is_zero or u == v or any(x > y for x, y in zip(u, v)):
            return False
        rest = NormalVector([y - x for x, y in zip(u, v)])
        if not (satisfies_matching(u, system) and satisfies_matching(rest, system)):
            return False
        return not admissible_summands or (is_admissible(u) and is_admissible(rest))

    if solutions is not None and any(splits(u) for u in solutions):
        return False
    return not any(splits(u) for u in solutions_below(v, system))


def vertex_link_vector(skeleton: Skeleton, index: int) -> NormalVector:
    """Coordinates of the vertex-linking surface of one vertex class."""
    vertex = skeleton.vertex_class(index)
    entries = [0] * (DISKS_PER_TET * skeleton.triangulation.tet_count)
    for t, a in vertex.corners:
        entries[DISKS_PER_TET * t + a] += 1
    return NormalVector(entries)
