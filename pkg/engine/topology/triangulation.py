from collections import namedtuple
from logging import getLogger
from typing import List, Optional, Sequence, Tuple

from lark.exceptions import UnexpectedInput # type: ignore
from lark.tree import Tree # type: ignore

from engine.log import LOGGER_NAME
logger = getLogger(LOGGER_NAME)

from engine.errors import NormqError
from engine.grammar import gluing_parser
from engine.topology.perm import Perm, face_images, face_vertices, from_face_images, inverse, is_permutation


# Face `face` of the source tetrahedron is glued to face `face` of
# tetrahedron `tet`; `perm` maps source vertices to target vertices.
Gluing = namedtuple('Gluing', ('tet', 'face', 'perm'))


class Triangulation:
    """Tetrahedra with their face gluings; a face with no gluing is a boundary face."""
    def __init__(self, gluings: Sequence[Sequence[Optional[Gluing]]], name: str='<unnamed>'):
        if len(gluings) == 0:
            raise NormqError('a triangulation needs at least one tetrahedron')
        self._gluings = tuple(tuple(g) for g in gluings)
        self.name = name
        self._validate()

    @property
    def tet_count(self) -> int:
        return len(self._gluings)

    @property
    def gluings(self) -> Tuple[Tuple[Optional[Gluing], ...], ...]:
        return self._gluings

    def gluing(self, tet: int, face: int) -> Optional[Gluing]:
        """Get the gluing of a face, or None on the boundary."""
        return self._gluings[tet][face]

    def slots(self) -> List[Tuple[int, int]]:
        """All (tetrahedron, face) pairs in table order."""
        return [(t, f) for t in range(self.tet_count) for f in range(4)]

    @property
    def boundary_face_count(self) -> int:
        return sum(1 for t, f in self.slots() if self.gluing(t, f) is None)

    @property
    def is_closed(self) -> bool:
        return self.boundary_face_count == 0

    def relabel(self, order: Sequence[int]) -> 'Triangulation':
        """Renumber tetrahedra: old tetrahedron order[i] becomes tetrahedron i."""
        if sorted(order) != list(range(self.tet_count)):
            raise NormqError('relabeling is not a permutation of the tetrahedra')
        new_index = {old: new for new, old in enumerate(order)}
        gluings = []
        for old in order:
            row = []
            for g in self._gluings[old]:
                row.append(None if g is None else Gluing(new_index[g.tet], g.face, g.perm))
            gluings.append(row)
        return Triangulation(gluings, name=self.name)

    def __eq__(self, other) -> bool:
        return isinstance(other, Triangulation) and self._gluings == other._gluings

    def __hash__(self) -> int:
        return hash(self._gluings)

    def _validate(self):
        for t, row in enumerate(self._gluings):
            if len(row) != 4:
                raise NormqError('tetrahedron {} has {} faces'.format(t, len(row)))
        for t, f in self.slots():
            problem = _gluing_problem(self._gluings, t, f)
            if problem is not None:
                raise NormqError('tetrahedron {} face {}: {}'.format(t, f, problem))


def _gluing_problem(gluings, tet: int, face: int) -> Optional[str]:
    """Describe what is wrong with one gluing, or None if it is valid."""
    g = gluings[tet][face]
    if g is None:
        return None
    if not 0 <= g.tet < len(gluings):
        return 'dangling gluing target: tetrahedron {}'.format(g.tet)
    if not 0 <= g.face < 4:
        return 'dangling gluing target: face {}'.format(g.face)
    if not is_permutation(g.perm) or g.perm[face] != g.face:
        return 'permutation does not map face {} onto face {}'.format(face, g.face)
    if (g.tet, g.face) == (tet, face):
        return 'face glued to itself'
    back = gluings[g.tet][g.face]
    if back is None or (back.tet, back.face) != (tet, face) or tuple(back.perm) != inverse(g.perm):
        return 'non-involutive gluing'
    return None


def parse_triangulation(text: str, name: str='<input>') -> Triangulation:
    """Parse a gluing table."""
    logger.debug('parsing gluing table - {}'.format(name))
    try:
        tree = gluing_parser().parse(text)
    except UnexpectedInput as e:
        raise NormqError('line {}: malformed line'.format(e.line))
    except Exception as e:
        raise NormqError('malformed gluing table: {}'.format(str(e)))

    count_token = tree.children[0].children[0]
    tet_count = int(count_token)
    if tet_count < 1:
        raise NormqError('line {}: tetrahedron count must be positive'.format(count_token.line))
    faces = tree.children[1:]
    if len(faces) != 4 * tet_count:
        last = faces[-1].children[0].line if faces else count_token.line
        line = faces[4 * tet_count].children[0].line if len(faces) > 4 * tet_count else last
        raise NormqError('line {}: expected {} face lines, found {}'.format(line, 4 * tet_count, len(faces)))

    gluings = [[None] * 4 for _ in range(tet_count)] # type: List[List[Optional[Gluing]]]
    lines = {}
    for index, face in enumerate(faces):
        tet, f = divmod(index, 4)
        lines[tet, f] = face.children[0].line
        gluings[tet][f] = _read_face(face, f)

    for tet, f in sorted(lines):
        problem = _gluing_problem(gluings, tet, f)
        if problem is not None:
            raise NormqError('line {}: {}'.format(lines[tet, f], problem))
    return Triangulation(gluings, name=name)


def _read_face(face: Tree, source: int) -> Optional[Gluing]:
    """Read one face line."""
    if face.data == 'boundary':
        return None
    elif face.data == 'glued':
        tet, target, images = face.children
        line = tet.line
        if len(images) != 3 or any(c not in '0123' for c in images):
            raise NormqError('line {}: malformed permutation: {}'.format(line, images))
        target = int(target)
        if not 0 <= target < 4:
            raise NormqError('line {}: dangling gluing target: face {}'.format(line, target))
        images = tuple(int(c) for c in images)
        if sorted(images) != list(face_vertices(target)):
            raise NormqError('line {}: permutation does not map face {} onto face {}'.format(line, source, target))
        return Gluing(int(tet), target, from_face_images(source, target, images))
    else:
        raise AssertionError('unexpected face kind: {}'.format(face.data))


def serialize_triangulation(tri: Triangulation) -> str:
    """Write the canonical gluing table of a triangulation."""
    lines = ['{}'.format(tri.tet_count)]
    for t, f in tri.slots():
        g = tri.gluing(t, f)
        if g is None:
            lines.append('bdry')
        else:
            images = ''.join(str(v) for v in face_images(g.perm, f))
            lines.append('{} {} {}'.format(g.tet, g.face, images))
    return '\n'.join(lines) + '\n'
