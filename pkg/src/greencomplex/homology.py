"""Boundary operators, form Laplacians and Betti numbers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .complex import Simplex, SimplicialComplex, closure_violations
from .fredholm import IntMatrix


@dataclass(frozen=True)
class ChainComplexData:
    """Ordered simplices per degree and the integer boundary matrices.

    ``boundaries[k]`` maps k-chains to (k-1)-chains; ``boundaries[0]`` is the
    empty 0 x v0 map.
    """

    bases: tuple[tuple[Simplex, ...], ...]
    boundaries: tuple[IntMatrix, ...]

    def boundary(self, k: int) -> IntMatrix:
        if 0 <= k < len(self.boundaries):
            return self.boundaries[k]
        rows = len(self.bases[k - 1]) if 0 < k <= len(self.bases) else 0
        cols = len(self.bases[k]) if 0 <= k < len(self.bases) else 0
        return [[0] * cols for _ in range(rows)]


def chain_complex(c: SimplicialComplex) -> ChainComplexData:
    if closure_violations(c):
        raise ValueError("not a simplicial complex")
    bases = [[] for _ in range(c.dimension + 1)]
    for x in c.ordered:
        bases[len(x) - 1].append(x)
    index = [{x: i for i, x in enumerate(b)} for b in bases]
    boundaries: list[IntMatrix] = [[]]
    for k in range(1, len(bases)):
        d = [[0] * len(bases[k]) for _ in range(len(bases[k - 1]))]
        for j, x in enumerate(bases[k]):
            for pos in range(len(x)):
                face = x[:pos] + x[pos + 1 :]
                d[index[k - 1][face]][j] = -1 if pos % 2 else 1
        boundaries.append(d)
    return ChainComplexData(tuple(tuple(b) for b in bases), tuple(boundaries))


def exact_rank(m: IntMatrix) -> int:
    """Rank over the rationals by fraction-free elimination."""
    if not m or not m[0]:
        return 0
    a = np.array(m, dtype=object)
    rows, cols = a.shape
    rank, prev = 0, 1
    for col in range(cols):
        if rank == rows:
            break
        pivots = np.nonzero(a[rank:, col] != 0)[0]
        if len(pivots) == 0:
            continue
        p = rank + pivots[0]
        if p != rank:
            a[[rank, p]] = a[[p, rank]]
        if rank + 1 < rows:
            a[rank + 1 :, col + 1 :] = (
                a[rank, col] * a[rank + 1 :, col + 1 :]
                - np.outer(a[rank + 1 :, col], a[rank, col + 1 :])
            ) // prev
            a[rank + 1 :, col] = 0
        prev = a[rank, col]
        rank += 1
    return rank


def betti(c: SimplicialComplex) -> tuple[int, ...]:
    cc = chain_complex(c)
    ranks = [0] + [exact_rank(d) for d in cc.boundaries[1:]] + [0]
    return tuple(
        len(cc.bases[k]) - ranks[k] - ranks[k + 1] for k in range(len(cc.bases))
    )


def _gram(a: IntMatrix, b: IntMatrix, transpose_first: bool) -> IntMatrix:
    x = np.array(a, dtype=object).reshape(len(a), -1)
    y = np.array(b, dtype=object).reshape(len(b), -1)
    out = x.T.dot(y) if transpose_first else x.dot(y.T)
    return [[int(v) for v in row] for row in out]


def form_laplacian(c: SimplicialComplex, k: int) -> IntMatrix:
    """L_k = d_k^T d_k + d_{k+1} d_{k+1}^T on k-chains."""
    if not 0 <= k <= c.dimension:
        raise ValueError(f"degree {k} outside 0..{c.dimension}")
    cc = chain_complex(c)
    n = len(cc.bases[k])
    out = [[0] * n for _ in range(n)]
    if k > 0:
        down = _gram(cc.boundary(k), cc.boundary(k), transpose_first=True)
        out = [[p + q for p, q in zip(r, s)] for r, s in zip(out, down)]
    if k + 1 <= c.dimension:
        up = _gram(cc.boundary(k + 1), cc.boundary(k + 1), transpose_first=False)
        out = [[p + q for p, q in zip(r, s)] for r, s in zip(out, up)]
    return out


def symmetric_eigenvalues(m: IntMatrix) -> list[float]:
    if not m:
        return []
    return [float(v) for v in np.linalg.eigvalsh(np.array(m, dtype=float))]


def volume_laplacian_eigs(c: SimplicialComplex) -> list[float]:
    """Ascending eigenvalues of the top-degree form Laplacian.

    The boundary is augmented, so a 0-dimensional complex gets the all-ones
    matrix rather than zero. With that convention the volume spectrum of a
    join is the set of pairwise sums of the factors' spectra.
    """
    if not len(c):
        raise ValueError("empty complex has no volume Laplacian")
    if c.dimension == 0:
        n = len(c)
        return symmetric_eigenvalues([[1] * n for _ in range(n)])
    return symmetric_eigenvalues(form_laplacian(c, c.dimension))


def hodge_nullities(c: SimplicialComplex, tol: float = 1e-7) -> tuple[int, ...]:
    """Zero-eigenvalue counts of every L_k, for cross-checking Betti numbers."""
    return tuple(
        sum(1 for v in symmetric_eigenvalues(form_laplacian(c, k)) if abs(v) < tol)
        for k in range(c.dimension + 1)
    )


def boundary_squares_vanish(cc: ChainComplexData) -> bool:
    for k in range(2, len(cc.boundaries)):
        a = np.array(cc.boundaries[k - 1], dtype=object)
        b = np.array(cc.boundaries[k], dtype=object)
        if a.size and b.size and np.any(a.dot(b) != 0):
            return False
    return True


def pairwise_sums(a: list[float], b: list[float]) -> list[float]:
    return sorted(x + y for x, y in product(a, b))
