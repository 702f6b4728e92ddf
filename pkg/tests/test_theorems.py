import pytest

from conftest import CLOSED_FIXTURES, load
from engine.errors import NormqError
from engine.normal.coords import QUAD, parse_vector
from engine.normal.enumerate import EnumerationConfig
from engine.normal.matching import build_matching_system
from engine.surface.complex import build_surface
from engine.surface.invariants import invariants
from engine.topology.skeleton import compute_skeleton
from engine.topology.triangulation import parse_triangulation
from engine.verify.batch import BatchSummary, Tally, _verify_one, verify_batch
from engine.verify.theorems import (CHECKS, CLAIM1, CLAIM2, CLASSIFICATION, EULER_SPLIT, GAMMA, GENUS_BOUND,
                                    LEMMA1, LEMMA2, PLANAR, PROOF_CHAIN, ROUND_TRIP, THEOREM1, THEOREM2, WEIGHT,
                                    Check, check_theorem1, report_surface)


def _report(loaded, text):
    return report_surface(loaded.tri, loaded.skeleton, parse_vector(text), loaded.system)


def test_two_quads(s3):
    report = _report(s3, '0 0 0 0 1 0 0  0 0 0 0 1 0 0')
    assert report.n == 2
    assert report.check(THEOREM1) == Check(THEOREM1, True, 14, True, ())
    assert report.check(GENUS_BOUND) == Check(GENUS_BOUND, True, 14, True, ())
    assert report.check(THEOREM2) == Check(THEOREM2, True, 16, True, ())
    assert report.check(LEMMA1).margin == 8
    assert report.check(LEMMA2).margin == 4
    assert report.check(PROOF_CHAIN).margin == 12
    assert report.check(GAMMA) == Check(GAMMA, True, 8, True, ())
    assert report.check(PLANAR) == Check(PLANAR, True, None, True, ())
    assert report.violations == []
    assert report.soft_failures == []
    assert {c.name for c in report.checks} == set(CHECKS)


def test_vertex_link(s3):
    report = _report(s3, '1 0 0 0 0 0 0  1 0 0 0 0 0 0')
    assert report.check(THEOREM1).margin == 0
    assert report.check(THEOREM1).holds
    assert report.check(GENUS_BOUND).margin == 0
    theorem2 = report.check(THEOREM2)
    assert theorem2.holds is None
    assert theorem2.caveats == ('vertex-linking component',)
    assert report.check(CLAIM1) == Check(CLAIM1, True, 0, True, ())
    for name in (CLAIM2, LEMMA2, PROOF_CHAIN):
        assert report.check(name).holds is None
    assert report.check(GAMMA).holds is None
    assert report.check(PLANAR).margin == 0
    assert report.violations == []


def test_bounded_surface(ball):
    report = _report(ball, '0 0 0 0 1 0 0')
    theorem = report.check(THEOREM1)
    assert theorem == Check(THEOREM1, True, 6, False, ('F not closed', 'M not closed'))
    assert report.check(GENUS_BOUND).holds is None
    assert report.check(THEOREM2) == Check(THEOREM2, True, 4, False, ('M not closed',))
    assert report.check(WEIGHT) == Check(WEIGHT, True, 0, True, ())
    assert report.check(EULER_SPLIT).caveats == ('hypothesis: closed',)
    assert not report.check(EULER_SPLIT).hard
    assert report.hypotheses == {'closed_manifold': False, 'closed_surface': False, 'nonempty': True}
    assert report.violations == []


def test_structural_checks(s3):
    report = _report(s3, '1 0 0 0 1 0 0  1 0 0 0 1 0 0')
    for name in (ROUND_TRIP, CLASSIFICATION, WEIGHT):
        assert report.check(name).holds
        assert report.check(name).hard
    with pytest.raises(NormqError, match='no such check'):
        report.check('theorem3')


def test_empty_surface(s3):
    report = _report(s3, '0 0 0 0 0 0 0  0 0 0 0 0 0 0')
    assert report.vacuous
    assert report.checks == ()
    assert report.decomposition is None
    surface = build_surface(s3.tri, s3.skeleton, parse_vector('0 0 0 0 0 0 0  0 0 0 0 0 0 0'))
    with pytest.raises(NormqError, match='vacuous'):
        check_theorem1(invariants(surface))


def _quad_meets_itself(surface):
    """Whether some arc has the same quad on both sides."""
    for arc in surface.arcs:
        disks = {d for d, _ in arc.sides}
        if len(arc.sides) == 2 and len(disks) == 1 and surface.disks[arc.sides[0][0]].kind == QUAD:
            return True
    return False


def test_self_glued_quad_breaks_lemma2():
    loaded = load('onevertex_t1.tri')
    report = _report(loaded, '0 0 1 1 1 0 0')
    inv = report.invariants
    assert (inv.chi, inv.triangle_count, inv.quad_count) == (0, 2, 1)
    assert inv.topology() == 'torus'
    assert _quad_meets_itself(inv.surface)
    # B' is an annulus, not a disk, so the |omega| = 0 bound 4 - 3Q = 1 fails.
    assert report.decomposition.omega == ()
    assert report.decomposition.chi_b_prime == 0
    assert report.check(LEMMA2) == Check(LEMMA2, False, -1, True, ())
    assert report.violations == [report.check(LEMMA2)]
    for name in (THEOREM1, GENUS_BOUND, THEOREM2, CLAIM1, CLAIM2, LEMMA1, PROOF_CHAIN, WEIGHT, PLANAR,
                 ROUND_TRIP, CLASSIFICATION):
        assert report.check(name).holds


def test_one_vertex_bounds():
    loaded = load('onevertex_t1.tri')
    summary = verify_batch(loaded.tri, loaded.skeleton, EnumerationConfig(max_coordinate=1), loaded.system)
    assert summary.max_vertex_degree == 4
    assert summary.violators == [(parse_vector('0 0 1 1 1 0 0'), LEMMA2)]
    assert summary.hard_failed
    for outcome in summary.built:
        for check in outcome.checks:
            if check.name in (THEOREM1, THEOREM2) and check.holds is not None:
                assert check.holds


@pytest.mark.parametrize('name', CLOSED_FIXTURES)
def test_closed_sweep(name):
    loaded = load(name)
    summary = verify_batch(loaded.tri, loaded.skeleton, EnumerationConfig(max_coordinate=2), loaded.system)
    assert summary.surfaces > 0
    assert summary.non_manifold == []
    assert all(o.closed for o in summary.built)
    # Only a quad glued to itself can push B' below the lemma 2 bound.
    for v, check in summary.violators:
        assert check in (LEMMA2, PROOF_CHAIN)
        assert _quad_meets_itself(build_surface(loaded.tri, loaded.skeleton, v, loaded.system))
    violators = {v for v, _ in summary.violators}
    if name == 's3_double.tri':
        assert summary.surfaces == 566
        assert violators == set()
    elif name == 'onevertex_t1.tri':
        assert {parse_vector('0 0 1 1 1 0 0'), parse_vector('1 1 2 2 1 0 0')} <= violators
    for tally in (THEOREM1, THEOREM2, GENUS_BOUND):
        assert summary.tallies[tally].hard_failed == 0


def test_tally():
    tally = Tally(THEOREM1)
    tally.add(Check(THEOREM1, True, 3, True, ()))
    tally.add(Check(THEOREM1, False, -1, True, ()))
    tally.add(Check(THEOREM1, False, -2, False, ()))
    tally.add(Check(THEOREM1, None, None, False, ()))
    assert tally.describe() == {'passed': 1, 'failed': 2, 'hard_failed': 1, 'not_applicable': 1, 'min_margin': -2}


def test_batch_ball(ball):
    summary = verify_batch(ball.tri, ball.skeleton, EnumerationConfig(max_coordinate=1), ball.system)
    assert summary.surfaces == 63
    assert not summary.vacuous
    assert summary.non_manifold == []
    assert not summary.hard_failed
    assert summary.tallies[THEOREM1].not_applicable == 0
    # A lone triangle is a disk with chi 1, below 2 - 7Q; the failure is soft in a ball.
    assert summary.tallies[THEOREM1].failed == 4
    assert summary.tallies[THEOREM1].hard_failed == 0
    assert (parse_vector('1 0 0 0 0 0 0'), THEOREM1) in summary.soft_failures
    assert summary.tallies[GENUS_BOUND].passed == 0


def test_batch_double_tetrahedron(s3):
    summary = verify_batch(s3.tri, s3.skeleton, EnumerationConfig(max_coordinate=1), s3.system)
    assert summary.surfaces == 63
    assert summary.violators == []
    assert [o.vector for o in summary.outcomes] == sorted(o.vector for o in summary.outcomes)
    assert all(o.closed for o in summary.outcomes)
    assert summary.tallies[THEOREM1].min_margin == 0


def test_batch_workers_agree(s3):
    config = EnumerationConfig(max_coordinate=1)
    serial = verify_batch(s3.tri, s3.skeleton, config, s3.system)
    parallel = verify_batch(s3.tri, s3.skeleton, EnumerationConfig(max_coordinate=1, jobs=2), s3.system)
    assert serial.outcomes == parallel.outcomes


def test_batch_vacuous(s3):
    summary = BatchSummary(s3.tri, s3.skeleton, EnumerationConfig(), [])
    assert summary.vacuous
    assert not summary.hard_failed
    assert all(t.min_margin is None for t in summary.tallies.values())


def test_batch_records_non_manifold():
    tri = parse_triangulation('1\n0 1 032\n0 0 132\nbdry\nbdry\n')
    skeleton = compute_skeleton(tri)
    v = parse_vector('0 0 0 0 0 1 0')
    outcome = _verify_one((tri, skeleton, build_matching_system(tri, skeleton), v))
    assert outcome.checks == ()
    assert 'non-manifold identification' in outcome.failure
    summary = BatchSummary(tri, skeleton, EnumerationConfig(), [outcome])
    assert summary.non_manifold == [outcome]
    assert summary.built == []
    assert not summary.hard_failed
