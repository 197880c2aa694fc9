"""Fredholm connection matrices 1 + A' over the integers.

Determinants and inverses use fraction-free (Bareiss) elimination on numpy
object arrays, so every entry stays an exact Python integer.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np

from .complex import (
    Simplex,
    SimplicialComplex,
    euler_characteristic,
    fermi_characteristic,
    graph_euler_characteristic,
    unit_sphere,
)
from .refinement import RefinedGraph, barycentric, connection

IntMatrix = list[list[int]]


class NotUnimodular(ValueError):
    pass


def _as_array(m: Sequence[Sequence[int]]) -> np.ndarray:
    a = np.empty((len(m), len(m[0]) if len(m) else 0), dtype=object)
    for i, row in enumerate(m):
        a[i, :] = [int(v) for v in row]
    return a


def _check_square(a: np.ndarray) -> int:
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    return a.shape[0]


def to_lists(a: np.ndarray) -> IntMatrix:
    return [[int(v) for v in row] for row in a]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    return to_lists(_as_array(a).dot(_as_array(b)))


def fredholm_matrix(cg: RefinedGraph) -> IntMatrix:
    """Identity plus the adjacency matrix of the connection graph."""
    n = len(cg.graph.vertices)
    m = identity(n)
    for u, v in cg.graph.edges:
        m[u][v] = m[v][u] = 1
    return m


def _eliminate(a: np.ndarray, ncols: int) -> tuple[int, bool]:
    """In-place Bareiss forward elimination over the leading square block.

    Returns the sign of the row permutation and whether the block is singular.
    Columns beyond the square block ride along (augmented systems).
    """
    n = a.shape[0]
    sign = 1
    prev = 1
    for k in range(n):
        if a[k, k] == 0:
            below = [i for i in range(k + 1, n) if a[i, k] != 0]
            if not below:
                return sign, True
            i = below[0]
            a[[k, i]] = a[[i, k]]
            sign = -sign
        if k + 1 < n:
            a[k + 1 :, k + 1 :] = (
                a[k, k] * a[k + 1 :, k + 1 :] - np.outer(a[k + 1 :, k], a[k, k + 1 :])
            ) // prev
            a[k + 1 :, k] = 0
        prev = a[k, k]
    return sign, False


def det_exact(m: Sequence[Sequence[int]]) -> int:
    a = _as_array(m)
    n = _check_square(a)
    if n == 0:
        return 1
    sign, singular = _eliminate(a, n)
    if singular:
        return 0
    return sign * int(a[n - 1, n - 1])


def green_inverse(m: Sequence[Sequence[int]]) -> IntMatrix:
    """Exact inverse of a unimodular integer matrix."""
    a = _as_array(m)
    n = _check_square(a)
    if n == 0:
        return []
    aug = np.concatenate([a, _as_array(identity(n))], axis=1)
    _, singular = _eliminate(aug, n)
    if singular:
        raise NotUnimodular("not unimodular: determinant is 0")
    d = aug[n - 1, n - 1]
    if d not in (1, -1):
        raise NotUnimodular(f"not unimodular: determinant is {d}")
    upper, rhs = aug[:, :n], aug[:, n:]
    # Fraction-free back substitution: x holds d * inverse.
    x = np.empty((n, n), dtype=object)
    for i in range(n - 1, -1, -1):
        acc = d * rhs[i]
        if i + 1 < n:
            acc = acc - upper[i, i + 1 :].dot(x[i + 1 :])
        x[i] = acc // upper[i, i]
    return to_lists(x * d)


# ---------------------------------------------------------------------------
# Green function report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GreenRow:
    vertex: int
    simplex: Simplex
    dim: int
    index: int  # 1 - chi(S(x)) in the Barycentric refinement
    green: int  # diagonal entry of (1 + A')^-1
    match: bool


@dataclass(frozen=True)
class GreenReport:
    rows: tuple[GreenRow, ...]
    determinant: int
    psi_product: int

    @property
    def ok(self) -> bool:
        return (
            self.determinant in (-1, 1)
            and self.determinant == self.psi_product
            and all(r.match for r in self.rows)
        )

    def to_dict(self) -> dict:
        return {
            "determinant": self.determinant,
            "psi_product": self.psi_product,
            "ok": self.ok,
            "rows": [
                {**asdict(r), "simplex": list(r.simplex)} for r in self.rows
            ],
        }

    def to_table(self) -> str:
        header = ("vertex", "simplex", "dim", "i(x)", "g(x,x)", "match")
        body = [
            (str(r.vertex), ",".join(map(str, r.simplex)), str(r.dim), str(r.index),
             str(r.green), "yes" if r.match else "NO")
            for r in self.rows
        ]
        widths = [max(len(h), *(len(b[i]) for b in body)) if body else len(h)
                  for i, h in enumerate(header)]
        lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
        lines += ["  ".join(c.rjust(w) for c, w in zip(b, widths)) for b in body]
        lines.append(f"det(1+A') = {self.determinant}   prod omega = {self.psi_product}")
        return "\n".join(lines)


def sphere_indices(r: RefinedGraph) -> list[int]:
    """1 - chi(S(x)) for every vertex of a refined graph, in vertex order."""
    return [1 - graph_euler_characteristic(unit_sphere(r.graph, v)) for v in r.graph.vertices]


def green_report(c: SimplicialComplex) -> GreenReport:
    r = barycentric(c)
    m = fredholm_matrix(connection(c))
    det = det_exact(m)
    inv = green_inverse(m)
    rows = []
    for v, i in zip(r.graph.vertices, sphere_indices(r)):
        x = r.simplex_of_vertex(v)
        g = inv[v][v]
        rows.append(GreenRow(v, x, len(x) - 1, i, g, i == g))
    return GreenReport(tuple(rows), det, fermi_characteristic(c))


# ---------------------------------------------------------------------------
# Attaching and removing cells
# ---------------------------------------------------------------------------


def full_subcomplex(c: SimplicialComplex, vertices) -> SimplicialComplex:
    """All simplices of c whose vertices lie in the given set."""
    keep = set(vertices)
    return SimplicialComplex(frozenset(x for x in c.simplices if keep.issuperset(x)))


def is_full_subcomplex(c: SimplicialComplex, h: SimplicialComplex) -> bool:
    return h.is_subcomplex_of(c) and full_subcomplex(c, h.vertex_set) == h


def psi_attach_cell(c: SimplicialComplex, h: SimplicialComplex) -> tuple[int, int]:
    """(bordered determinant, (1 - chi(h)) * psi(c)).

    The new cell gets one extra row and column of 1+A', meeting every simplex
    of c that shares a vertex with h. The two numbers agree when h is a full
    subcomplex; otherwise the determinant sees the full subcomplex on V(h).
    """
    if not h.is_subcomplex_of(c):
        raise ValueError("h is not a subcomplex of c")
    cg = connection(c)
    m = fredholm_matrix(cg)
    support = set(h.vertex_set)
    hit = {i for i, x in enumerate(cg.simplices) if support.intersection(x)}
    border = [int(i in hit) for i in range(len(m))]
    bordered = [row + [b] for row, b in zip(m, border)] + [border + [1]]
    return det_exact(bordered), (1 - euler_characteristic(h)) * fermi_characteristic(c)


def psi_remove_cell(c: SimplicialComplex, x: Simplex) -> tuple[int, int]:
    """(det of 1+A' without the row and column of x, (1 - chi(S(x))) * psi(c))."""
    x = tuple(x)
    if x not in c:
        raise ValueError(f"{x} is not a simplex of the complex")
    sx = set(x)
    if any(len(y) > len(x) and sx.issubset(y) for y in c.simplices):
        raise ValueError(f"removal breaks closure: {x} is not a facet")
    r = barycentric(c)
    v = r.vertex_of_simplex[x]
    m = fredholm_matrix(connection(c))
    minor = [row[:v] + row[v + 1 :] for i, row in enumerate(m) if i != v]
    chi_sphere = graph_euler_characteristic(unit_sphere(r.graph, v))
    return det_exact(minor), (1 - chi_sphere) * fermi_characteristic(c)
