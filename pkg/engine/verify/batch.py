from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor
from logging import getLogger
from typing import Dict, List, Optional, Sequence, Tuple

from engine.log import LOGGER_NAME
logger = getLogger(LOGGER_NAME)

from engine.errors import NormqError
from engine.normal.coords import NormalVector
from engine.normal.enumerate import EnumerationConfig, enumerate_admissible
from engine.normal.matching import MatchingSystem, build_matching_system
from engine.topology.skeleton import Skeleton, max_vertex_degree
from engine.topology.triangulation import Triangulation
from engine.verify.theorems import CHECKS, Check, report_surface


# Outcome of one vector; `failure` is set instead of `checks` when the
# surface could not be built.
Outcome = namedtuple('Outcome', ('vector', 'checks', 'closed', 'vertex_linking', 'failure'))

NON_MANIFOLD = 'non-manifold identification'


class Tally:
    """Pass/fail counts and smallest margin of one check over a batch."""
    def __init__(self, name: str):
        self.name = name
        self.passed = 0
        self.failed = 0
        self.hard_failed = 0
        self.not_applicable = 0
        self.min_margin = None # type: Optional[int]

    def add(self, check: Check):
        if check.holds is None:
            self.not_applicable += 1
            return
        if check.holds:
            self.passed += 1
        else:
            self.failed += 1
            if check.hard:
                self.hard_failed += 1
        if check.margin is not None:
            self.min_margin = check.margin if self.min_margin is None else min(self.min_margin, check.margin)

    def describe(self) -> Dict[str, object]:
        return {
            'passed': self.passed,
            'failed': self.failed,
            'hard_failed': self.hard_failed,
            'not_applicable': self.not_applicable,
            'min_margin': self.min_margin
        }


class BatchSummary:
    """Aggregated checks over every enumerated surface of a triangulation."""
    def __init__(self, tri: Triangulation, skeleton: Skeleton, config: EnumerationConfig,
            outcomes: Sequence[Outcome]):
        self.triangulation = tri
        self.skeleton = skeleton
        self.config = config
        self.outcomes = tuple(sorted(outcomes, key=lambda o: o.vector))
        self.tallies = {name: Tally(name) for name in CHECKS}
        for outcome in self.outcomes:
            for check in outcome.checks:
                self.tallies[check.name].add(check)

    @property
    def surfaces(self) -> int:
        return len(self.outcomes)

    @property
    def vacuous(self) -> bool:
        return self.surfaces == 0

    @property
    def built(self) -> List[Outcome]:
        return [o for o in self.outcomes if o.failure is None]

    @property
    def non_manifold(self) -> List[Outcome]:
        return [o for o in self.outcomes if o.failure is not None]

    @property
    def violators(self) -> List[Tuple[NormalVector, str]]:
        """(vector, check) for every failed hard check."""
        return [(o.vector, c.name) for o in self.outcomes for c in o.checks if c.hard and c.holds is False]

    @property
    def soft_failures(self) -> List[Tuple[NormalVector, str]]:
        return [(o.vector, c.name) for o in self.outcomes for c in o.checks if not c.hard and c.holds is False]

    @property
    def hard_failed(self) -> bool:
        return len(self.violators) > 0

    @property
    def max_vertex_degree(self) -> int:
        return max_vertex_degree(self.skeleton)


def _verify_one(args) -> Outcome:
    tri, skeleton, system, v = args
    try:
        report = report_surface(tri, skeleton, v, system)
    except NormqError as e:
        if NON_MANIFOLD not in str(e):
            raise
        logger.debug('skipping vector - {}'.format(e))
        return Outcome(v, (), False, False, str(e))
    inv = report.invariants
    return Outcome(v, report.checks, inv.is_closed, inv.has_vertex_linking, None)


def verify_batch(tri: Triangulation, skeleton: Skeleton, config: EnumerationConfig,
        system: Optional[MatchingSystem]=None) -> BatchSummary:
    """Enumerate admissible surfaces, build each one, and check everything on it."""
    if system is None:
        system = build_matching_system(tri, skeleton)
    vectors = [v for v in enumerate_admissible(tri, skeleton, system, config) if not v.is_zero]
    logger.debug('verifying surfaces - {}'.format(len(vectors)))

    tasks = [(tri, skeleton, system, v) for v in vectors]
    if config.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            outcomes = list(pool.map(_verify_one, tasks))
    else:
        outcomes = [_verify_one(task) for task in tasks]

    summary = BatchSummary(tri, skeleton, config, outcomes)
    if summary.vacuous:
        logger.debug('no surfaces to verify')
    return summary
