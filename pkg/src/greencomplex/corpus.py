"""Named graphs and seeded random corpora."""

from __future__ import annotations

import random
from itertools import combinations

from .complex import Graph


def complete(n: int) -> Graph:
    return Graph(tuple(range(n)), frozenset(combinations(range(n), 2)))


def points(n: int) -> Graph:
    """P_n: n vertices, no edges."""
    return Graph(tuple(range(n)), frozenset())


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(tuple(range(n)), frozenset((i, (i + 1) % n) for i in range(n)))


def star(n: int) -> Graph:
    """S_n = K_1 + P_n: a center (label 0) with n leaves."""
    return Graph(tuple(range(n + 1)), frozenset((0, i) for i in range(1, n + 1)))


def linear(n: int) -> Graph:
    """L_n: the path with n edges."""
    return Graph(tuple(range(n + 1)), frozenset((i, i + 1) for i in range(n)))


def octahedron() -> Graph:
    # K_{2,2,2}: i and i+3 are the antipodal (non-adjacent) pairs
    return Graph(tuple(range(6)), frozenset(
        (i, j) for i, j in combinations(range(6), 2) if j - i != 3
    ))


def sixteen_cell() -> Graph:
    return Graph(tuple(range(8)), frozenset(
        (i, j) for i, j in combinations(range(8), 2) if j - i != 4
    ))


def windmill() -> Graph:
    """Three triangles glued along the edge (0, 1)."""
    return Graph.from_edges([(0, 1)] + [(a, c) for a in (0, 1) for c in (2, 3, 4)])


def bowtie() -> Graph:
    """Two triangles sharing vertex 0."""
    return Graph.from_edges([(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def utility() -> Graph:
    """K_{3,3} = P_3 + P_3."""
    return Graph.from_edges([(a, b) for a in range(3) for b in range(3, 6)])


# Heavy atoms first, then hydrogens; double bonds are single edges.
_RING6 = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]
_RING5 = [(4, 6), (6, 7), (7, 8), (8, 3)]

DNA_BASES: dict[str, list[tuple[int, int]]] = {
    # N1 C2 N3 C4 C5 C6 N7 C8 N9 | N6 | H on C2, C8, N9, N6, N6
    "adenine": _RING6 + _RING5 + [(5, 9), (1, 10), (7, 11), (8, 12), (9, 13), (9, 14)],
    # N1 C2 N3 C4 C5 C6 N7 C8 N9 | O6 N2 | H on N1, N2, N2, C8, N9
    "guanine": _RING6 + _RING5
    + [(5, 9), (1, 10), (0, 11), (10, 12), (10, 13), (7, 14), (8, 15)],
    # N1 C2 N3 C4 C5 C6 | O2 N4 | H on N1, C5, C6, N4, N4
    "cytosine": _RING6 + [(1, 6), (3, 7), (0, 8), (4, 9), (5, 10), (7, 11), (7, 12)],
    # N1 C2 N3 C4 C5 C6 | O2 O4 C(methyl) | H on N1, N3, C6, methyl x3
    "thymine": _RING6
    + [(1, 6), (3, 7), (4, 8), (0, 9), (2, 10), (5, 11), (8, 12), (8, 13), (8, 14)],
}


def dna_base(name: str) -> Graph:
    return Graph.from_edges(DNA_BASES[name])


# Flag triangulation of the projective plane: nine edge subdivisions of the
# six-vertex RP^2 {123,134,145,156,126,235,245,246,346,356}.
PROJECTIVE_PLANE_EDGES = [
    (1, 5), (1, 6), (1, 7), (1, 8), (1, 11), (2, 4), (2, 5), (2, 7), (2, 9),
    (2, 10), (2, 15), (3, 4), (3, 5), (3, 7), (3, 12), (3, 13), (3, 14), (3, 15),
    (4, 6), (4, 8), (4, 9), (4, 10), (4, 13), (4, 14), (5, 6), (5, 8), (5, 9),
    (5, 13), (5, 15), (6, 7), (6, 10), (6, 13), (7, 10), (7, 11), (7, 12), (7, 15),
    (8, 9), (8, 11), (8, 12), (8, 14), (11, 12), (12, 14),
]


def projective_plane() -> Graph:
    return Graph.from_edges(PROJECTIVE_PLANE_EDGES)


NAMED = {
    "octahedron": octahedron,
    "sixteen_cell": sixteen_cell,
    "windmill": windmill,
    "bowtie": bowtie,
    "utility": utility,
    "projective_plane": projective_plane,
}


def erdos_renyi(n: int, p: float, rng: random.Random) -> Graph:
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    return Graph(tuple(range(n)), frozenset(edges))


def random_graphs(
    count: int, seed: int, max_vertices: int = 8, probabilities=(0.3, 0.5, 0.7)
) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_vertices)
        out.append(erdos_renyi(n, rng.choice(probabilities), rng))
    return out
