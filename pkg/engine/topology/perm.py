from typing import Tuple


# A permutation of the tetrahedron's vertices {0,1,2,3}, as the tuple of
# images. Face f is the face opposite vertex f.
Perm = Tuple[int, int, int, int]

IDENTITY = (0, 1, 2, 3)


def face_vertices(face: int) -> Tuple[int, int, int]:
    """Vertices of a face, in ascending order."""
    return tuple(v for v in range(4) if v != face) # type: ignore


def face_edges(face: int) -> Tuple[Tuple[int, int], ...]:
    """Edges (a < b) of a face."""
    a, b, c = face_vertices(face)
    return ((a, b), (a, c), (b, c))


def edge_faces(a: int, b: int) -> Tuple[int, int]:
    """The two faces containing edge {a, b}."""
    return tuple(f for f in range(4) if f not in (a, b)) # type: ignore


def edges() -> Tuple[Tuple[int, int], ...]:
    """All six edges (a < b) of a tetrahedron."""
    return tuple((a, b) for a in range(4) for b in range(a + 1, 4))


def from_face_images(source: int, target: int, images: Tuple[int, int, int]) -> Perm:
    """Extend a map between two faces to a permutation of all four vertices."""
    perm = [0] * 4
    for v, image in zip(face_vertices(source), images):
        perm[v] = image
    perm[source] = target
    return tuple(perm) # type: ignore


def face_images(perm: Perm, source: int) -> Tuple[int, int, int]:
    """Images of a face's vertices, in ascending order of the source vertices."""
    return tuple(perm[v] for v in face_vertices(source)) # type: ignore


def inverse(perm: Perm) -> Perm:
    """Invert a permutation."""
    inv = [0] * 4
    for v, image in enumerate(perm):
        inv[image] = v
    return tuple(inv) # type: ignore


def is_permutation(perm: Tuple[int, ...]) -> bool:
    return sorted(perm) == [0, 1, 2, 3]
