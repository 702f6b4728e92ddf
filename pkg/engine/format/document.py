import json
from logging import getLogger
from typing import Any, Dict, List

from engine.log import LOGGER_NAME
logger = getLogger(LOGGER_NAME)

from engine.normal.coords import NormalVector, disk_type
from engine.normal.enumerate import EnumerationConfig
from engine.normal.matching import MatchingSystem
from engine.surface.complex import SurfaceComplex
from engine.topology.skeleton import Skeleton, max_vertex_degree
from engine.verify.batch import BatchSummary
from engine.verify.theorems import TheoremReport
from engine.version import VERSION


SURFACE_SCHEMA = 'normq-surface/1'
SUMMARY_SCHEMA = 'normq-summary/1'

N_CONVENTION = 'tetrahedron corners per vertex class'


def to_json(document: Any) -> str:
    """Serialize a document; key order is fixed so output is reproducible."""
    return json.dumps(document, indent=4, sort_keys=True)


def skeleton_document(skeleton: Skeleton) -> Dict[str, Any]:
    tri = skeleton.triangulation
    logger.debug('formatting skeleton - {}'.format(tri.name))
    return {
        'triangulation': tri.name,
        'tetrahedra': tri.tet_count,
        'closed': skeleton.is_closed,
        'euler_characteristic': skeleton.euler_characteristic,
        'max_vertex_degree': max_vertex_degree(skeleton),
        'vertices': [{
            'index': v.index,
            'corners': v.corners,
            'corner_count': len(v.corners),
            'boundary': v.boundary,
            'link_euler': v.link_euler,
            'link_ok': v.link_ok
        } for v in skeleton.vertex_classes],
        'edges': [{
            'index': e.index,
            'slots': e.slots,
            'degree': len(e.slots),
            'boundary': e.boundary,
            'reversed': e.reversed
        } for e in skeleton.edge_classes],
        'faces': [{
            'index': f.index,
            'slots': f.slots,
            'boundary': f.boundary
        } for f in skeleton.face_classes]
    }


def _coordinate_name(index: int) -> str:
    disk = disk_type(index)
    return '{}{}({})'.format('T' if disk.kind == 'triangle' else 'Q', disk.index, disk.tet)


def equations_document(system: MatchingSystem) -> Dict[str, Any]:
    rows = []
    for row in system.rows:
        terms = ['{}{}'.format('+' if c > 0 else '-', _coordinate_name(i) if abs(c) == 1
                 else '{}*{}'.format(abs(c), _coordinate_name(i))) for i, c in row.coefficients]
        rows.append({
            'face_class': row.face_class,
            'corner': row.corner,
            'equation': '{} = 0'.format(' '.join(terms)) if terms else '0 = 0',
            'trivial': row.trivial
        })
    return {'rows': rows, 'count': len(rows), 'trivial': len(system.trivial_rows)}


def complex_document(surface: SurfaceComplex) -> Dict[str, Any]:
    """The cells of a built surface."""
    return {
        'schema': SURFACE_SCHEMA,
        'vector': str(surface.vector),
        'cells': surface.counts(),
        'euler_characteristic': surface.euler_characteristic,
        'disks': [{
            'index': d.index,
            'tet': d.tet,
            'kind': d.kind,
            'type': d.type,
            'copy': d.copy,
            'corners': d.corners,
            'arcs': d.arcs
        } for d in surface.disks],
        'arcs': [{
            'index': a.index,
            'face': [a.tet, a.face],
            'corner': a.corner,
            'distance': a.distance,
            'disks': [d for d, _ in a.sides],
            'ends': a.ends
        } for a in surface.arcs],
        'points': [{
            'index': p.index,
            'edge_class': p.edge_class,
            'fan': [d for d, _ in p.fan],
            'closed': p.closed
        } for p in surface.points]
    }


def _components(report: TheoremReport) -> List[Dict[str, Any]]:
    return [{
        'chi': c.chi,
        'orientable': c.orientable,
        'boundary_circles': c.boundary_circles,
        'genus': c.genus,
        'crosscaps': c.crosscaps,
        'triangles': c.triangle_count,
        'quads': c.quad_count,
        'vertex_linking': c.vertex_linking,
        'linked_vertex': c.linked_vertex
    } for c in report.invariants.components]


def surface_document(report: TheoremReport) -> Dict[str, Any]:
    """Invariants, decomposition statistics and checks of one surface."""
    inv = report.invariants
    logger.debug('formatting surface report - {}'.format(report.vector))
    document = {
        'schema': SURFACE_SCHEMA,
        'version': VERSION,
        'vector': str(report.vector),
        'cells': inv.surface.counts(),
        'chi': inv.chi,
        'T': inv.triangle_count,
        'Q': inv.quad_count,
        'N': report.n,
        'N_convention': N_CONVENTION,
        'topology': inv.topology(),
        'components': _components(report),
        'hypotheses': report.hypotheses,
        'vacuous': report.vacuous,
        'checks': {c.name: {
            'holds': c.holds,
            'margin': c.margin,
            'hard': c.hard,
            'caveats': list(c.caveats)
        } for c in report.checks}
    }
    if report.decomposition is not None:
        document['decomposition'] = report.decomposition.stats()
    return document


def config_document(config: EnumerationConfig) -> Dict[str, Any]:
    return config.describe()


def summary_document(summary: BatchSummary) -> Dict[str, Any]:
    """Totals, per-check counts, smallest margins and violators of a batch."""
    return {
        'schema': SUMMARY_SCHEMA,
        'version': VERSION,
        'triangulation': summary.triangulation.name,
        'closed_manifold': summary.skeleton.is_closed,
        'N': summary.max_vertex_degree,
        'N_convention': N_CONVENTION,
        'config': config_document(summary.config),
        'surfaces': summary.surfaces,
        'vacuous': summary.vacuous,
        'closed_surfaces': sum(1 for o in summary.built if o.closed),
        'bounded_surfaces': sum(1 for o in summary.built if not o.closed),
        'with_vertex_linking': sum(1 for o in summary.built if o.vertex_linking),
        'non_manifold': [{'vector': str(o.vector), 'error': o.failure} for o in summary.non_manifold],
        'checks': {name: tally.describe() for name, tally in summary.tallies.items()},
        'violations': len(summary.violators),
        'violators': [{'vector': str(v), 'check': name} for v, name in summary.violators],
        'soft_failures': [{'vector': str(v), 'check': name} for v, name in summary.soft_failures]
    }