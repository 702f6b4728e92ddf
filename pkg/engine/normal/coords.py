from collections import namedtuple
from typing import Iterator, List, Optional, Sequence, Tuple

from lark.exceptions import UnexpectedInput # type: ignore

from engine.errors import NormqError
from engine.grammar import vector_parser


# Per tetrahedron: triangles T0..T3 (linking corner 0..3), then quads Q1..Q3.
# Quad k separates {0, k} from the other two corners.
DISKS_PER_TET = 7
TRIANGLE = 'triangle'
QUAD = 'quad'

DiskType = namedtuple('DiskType', ('tet', 'kind', 'index'))


def disk_types(tet: int) -> List[DiskType]:
    """The 7 disk types of one tetrahedron, in coordinate order."""
    return ([DiskType(tet, TRIANGLE, a) for a in range(4)]
            + [DiskType(tet, QUAD, k) for k in range(1, 4)])


def coordinate(disk: DiskType) -> int:
    """Position of a disk type in a normal vector."""
    if disk.kind == TRIANGLE:
        return DISKS_PER_TET * disk.tet + disk.index
    elif disk.kind == QUAD:
        return DISKS_PER_TET * disk.tet + 3 + disk.index
    else:
        raise AssertionError('unexpected disk kind: {}'.format(disk.kind))


def disk_type(index: int) -> DiskType:
    """Disk type at a position of a normal vector."""
    tet, k = divmod(index, DISKS_PER_TET)
    return DiskType(tet, TRIANGLE, k) if k < 4 else DiskType(tet, QUAD, k - 3)


def quad_pairs(k: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """The two corner pairs quad k separates; the pair holding corner 0 first."""
    rest = tuple(v for v in (1, 2, 3) if v != k)
    return (0, k), rest # type: ignore


def quad_separating(x: int, y: int) -> int:
    """The quad that separates corners {x, y} from the other two."""
    if x == y:
        raise AssertionError('unexpected equal corners: {}'.format(x))
    if 0 in (x, y):
        return x + y
    return 6 - x - y


def quad_cuts(k: int, a: int, b: int) -> bool:
    """Whether quad k crosses edge {a, b}."""
    return quad_separating(a, b) != k


class NormalVector:
    """Normal coordinates of a (possibly empty or disconnected) normal surface."""
    def __init__(self, entries: Sequence[int]):
        entries = tuple(int(x) for x in entries)
        if len(entries) % DISKS_PER_TET != 0:
            raise NormqError('vector length {} is not a multiple of {}'.format(len(entries), DISKS_PER_TET))
        if any(x < 0 for x in entries):
            raise NormqError('normal coordinates must be non-negative: {}'.format(entries))
        self.entries = entries

    @property
    def tet_count(self) -> int:
        return len(self.entries) // DISKS_PER_TET

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def __eq__(self, other) -> bool:
        return isinstance(other, NormalVector) and self.entries == other.entries

    def __lt__(self, other: 'NormalVector') -> bool:
        return self.entries < other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __str__(self) -> str:
        return '  '.join(' '.join(str(x) for x in self.tet(t)) for t in range(self.tet_count))

    def __repr__(self) -> str:
        return 'NormalVector({})'.format(list(self.entries))

    def __add__(self, other: 'NormalVector') -> 'NormalVector':
        return haken_sum(self, other)

    def tet(self, t: int) -> Tuple[int, ...]:
        """The 7 coordinates of one tetrahedron."""
        return self.entries[DISKS_PER_TET * t:DISKS_PER_TET * (t + 1)]

    def triangles(self, t: int, corner: int) -> int:
        return self.entries[DISKS_PER_TET * t + corner]

    def quads(self, t: int, k: int) -> int:
        return self.entries[DISKS_PER_TET * t + 3 + k]

    def quad_type(self, t: int) -> int:
        """The nonzero quad type of a tetrahedron, or 0 if it has no quads."""
        present = [k for k in range(1, 4) if self.quads(t, k) > 0]
        return present[0] if present else 0

    def count(self, disk: DiskType) -> int:
        return self.entries[coordinate(disk)]

    @property
    def triangle_count(self) -> int:
        """T: number of triangles."""
        return sum(self.triangles(t, a) for t in range(self.tet_count) for a in range(4))

    @property
    def quad_count(self) -> int:
        """Q: number of quads."""
        return sum(self.quads(t, k) for t in range(self.tet_count) for k in range(1, 4))

    @property
    def is_zero(self) -> bool:
        return not any(self.entries)

    @staticmethod
    def zero(tet_count: int) -> 'NormalVector':
        return NormalVector([0] * (DISKS_PER_TET * tet_count))


def is_admissible(v: NormalVector) -> bool:
    """At most one quad type is present in each tetrahedron."""
    return all(sum(1 for k in range(1, 4) if v.quads(t, k) > 0) <= 1 for t in range(v.tet_count))


def haken_sum(a: NormalVector, b: NormalVector) -> NormalVector:
    """Entrywise sum; the result is not necessarily admissible."""
    if len(a) != len(b):
        raise NormqError('cannot add vectors of lengths {} and {}'.format(len(a), len(b)))
    return NormalVector([x + y for x, y in zip(a, b)])


def is_disjoint_sum(a: NormalVector, b: NormalVector) -> bool:
    """Whether a + b is detectably the disjoint union of the two surfaces.

    Detected when one summand has no quads: its triangles then form the
    innermost layers around the vertices and never meet the other surface.
    """
    if len(a) != len(b):
        raise NormqError('cannot compare vectors of lengths {} and {}'.format(len(a), len(b)))
    return a.quad_count == 0 or b.quad_count == 0


def parse_vector(text: str, tet_count: Optional[int]=None) -> NormalVector:
    """Parse whitespace-separated normal coordinates."""
    try:
        tree = vector_parser().parse(text)
    except UnexpectedInput as e:
        raise NormqError('line {}: malformed vector'.format(e.line))
    entries = [int(token) for token in tree.children]
    if tet_count is not None and len(entries) != DISKS_PER_TET * tet_count:
        raise NormqError('vector has {} entries, expected {}'.format(len(entries), DISKS_PER_TET * tet_count))
    return NormalVector(entries)
