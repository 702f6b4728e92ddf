from typing import Optional, Tuple

from engine.context import Context, context
from engine.errors import NormqError
from engine.normal.coords import NormalVector, parse_vector
from engine.normal.enumerate import EnumerationConfig, enumerate_admissible, vertex_link_vector
from engine.normal.matching import build_matching_system
from engine.surface.complex import build_surface
from engine.topology.skeleton import Skeleton, compute_skeleton
from engine.topology.triangulation import Triangulation, parse_triangulation
from engine.verify.batch import verify_batch
from engine.verify.theorems import report_surface

from engine.format.document import (complex_document, equations_document, skeleton_document, summary_document,
                                    surface_document, to_json)
from engine.format.text import document_to_text


def _render(document, human: bool) -> str:
    return document_to_text(document) if human else to_json(document)


def _plural(count: int, singular: str, plural: str) -> str:
    return '{} {}'.format(count, singular if count == 1 else plural)


@context(source='name')
def load_triangulation(source: str, name: str) -> Tuple[Triangulation, Skeleton]:
    """Parse a gluing table and compute its skeleton."""
    try:
        tri = parse_triangulation(source, name)
    except NormqError as e:
        raise NormqError('Parse error: {}\n\n{}'.format(str(e), Context.format()))
    return tri, compute_skeleton(tri)


def _load_vector(tri: Triangulation, vector: str) -> NormalVector:
    try:
        return parse_vector(vector, tri.tet_count)
    except NormqError as e:
        raise NormqError('Vector error: {}\n\n{}'.format(str(e), Context.format()))


def run_validate(source: str, name: str) -> str:
    """Run the validate command."""
    tri, skeleton = load_triangulation(source, name)
    message = 'valid, {}, {}'.format(
        _plural(tri.tet_count, 'tetrahedron', 'tetrahedra'),
        _plural(tri.boundary_face_count, 'boundary face', 'boundary faces'))
    if skeleton.irregular_vertices:
        message += '; irregular vertex links: {}'.format(' '.join(str(v) for v in skeleton.irregular_vertices))
    return message


def run_skeleton(source: str, name: str, human: bool) -> str:
    _, skeleton = load_triangulation(source, name)
    return _render(skeleton_document(skeleton), human)


def run_equations(source: str, name: str, human: bool) -> str:
    tri, skeleton = load_triangulation(source, name)
    return _render(equations_document(build_matching_system(tri, skeleton)), human)


def run_enumerate(source: str, name: str, config: EnumerationConfig, count_only: bool) -> str:
    """Run the enumerate command: one vector per line after a comment header."""
    tri, skeleton = load_triangulation(source, name)
    system = build_matching_system(tri, skeleton)
    try:
        vectors = enumerate_admissible(tri, skeleton, system, config)
    except NormqError as e:
        raise NormqError('Enumeration error: {}\n\n{}'.format(str(e), Context.format()))
    if count_only:
        return str(len(vectors))
    header = ['# {}: max coordinate {}'.format(tri.name, config.max_coordinate)]
    if config.fundamental_only:
        header.append('# fundamental with respect to {}'.format(config.summands))
    return '\n'.join(header + [str(v) for v in vectors])


def run_build(source: str, name: str, vector: str, human: bool) -> str:
    tri, skeleton = load_triangulation(source, name)
    v = _load_vector(tri, vector)
    try:
        surface = build_surface(tri, skeleton, v)
    except NormqError as e:
        raise NormqError('Build error: {}\n\n{}'.format(str(e), Context.format()))
    return _render(complex_document(surface), human)


def run_analyze(source: str, name: str, vector: str, human: bool) -> str:
    tri, skeleton = load_triangulation(source, name)
    v = _load_vector(tri, vector)
    try:
        report = report_surface(tri, skeleton, v)
    except NormqError as e:
        raise NormqError('Build error: {}\n\n{}'.format(str(e), Context.format()))
    return _render(surface_document(report), human)


def run_verify(source: str, name: str, config: EnumerationConfig, human: bool) -> Tuple[str, bool]:
    """Run the verify command; also report whether a hard check failed."""
    tri, skeleton = load_triangulation(source, name)
    try:
        summary = verify_batch(tri, skeleton, config)
    except NormqError as e:
        raise NormqError('Verification error: {}\n\n{}'.format(str(e), Context.format()))
    return _render(summary_document(summary), human), summary.hard_failed


def run_vertex_link(source: str, name: str, index: Optional[int]) -> str:
    """Run the vertex-link command: one vector per vertex class, or the requested one."""
    _, skeleton = load_triangulation(source, name)
    indices = range(len(skeleton.vertex_classes)) if index is None else [index]
    return '\n'.join(str(vertex_link_vector(skeleton, i)) for i in indices)
