"""Vertex Laplacian spectra and the join spectral identities."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .arithmetic import join_all, zykov_join, zykov_product
from .complex import Graph
from .corpus import complete

ZERO_TOL = 1e-9
COMPARE_TOL = 1e-6
MAX_VERTICES = 200


def laplacian(g: Graph) -> np.ndarray:
    index = {v: i for i, v in enumerate(g.vertices)}
    n = len(index)
    m = np.zeros((n, n))
    for u, v in g.edges:
        i, j = index[u], index[v]
        m[i, j] = m[j, i] = -1.0
        m[i, i] += 1.0
        m[j, j] += 1.0
    return m


@dataclass(frozen=True)
class SpectrumReport:
    eigenvalues: tuple[float, ...]

    def multiplicity_of(self, value: float, tol: float = COMPARE_TOL) -> int:
        return sum(1 for v in self.eigenvalues if abs(v - value) < tol)

    def contains(self, value: float, tol: float = COMPARE_TOL) -> bool:
        return self.multiplicity_of(value, tol) > 0

    @property
    def lambda2(self) -> Optional[float]:
        """Second smallest eigenvalue; 0 for disconnected graphs."""
        if len(self.eigenvalues) < 2:
            return None
        v = self.eigenvalues[1]
        return 0.0 if abs(v) < ZERO_TOL else v

    @property
    def smallest_nonzero(self) -> Optional[float]:
        return next((v for v in self.eigenvalues if v > ZERO_TOL), None)

    @property
    def maximum(self) -> float:
        return self.eigenvalues[-1] if self.eigenvalues else 0.0

    @property
    def zero_multiplicity(self) -> int:
        return sum(1 for v in self.eigenvalues if abs(v) < ZERO_TOL)

    def to_dict(self) -> dict:
        return {
            "eigenvalues": [round(v, 10) for v in self.eigenvalues],
            "lambda2": None if self.lambda2 is None else round(self.lambda2, 10),
            "max": round(self.maximum, 10),
        }


def vertex_laplacian_spectrum(g: Graph) -> SpectrumReport:
    if len(g) > MAX_VERTICES:
        raise ValueError(f"spectra limited to {MAX_VERTICES} vertices")
    if not g.vertices:
        return SpectrumReport(())
    vals = np.linalg.eigvalsh(laplacian(g))
    return SpectrumReport(tuple(float(v) for v in vals))


def join_lambda2(g: Graph, h: Graph) -> float:
    """Second Laplacian eigenvalue of G + H from the parts.

    The join spectrum is 0, |V(G)|+|V(H)|, and the nonzero-index eigenvalues
    of each part shifted up by the order of the other part.
    """
    n, m = len(g), len(h)
    candidates = [float(n + m)]
    lg = vertex_laplacian_spectrum(g).lambda2
    lh = vertex_laplacian_spectrum(h).lambda2
    if lg is not None:
        candidates.append(lg + m)
    if lh is not None:
        candidates.append(lh + n)
    return min(candidates)


def stated_join_lambda2(g: Graph, h: Graph) -> float:
    """min(|V(G)|, |V(H)|) + min(lambda2(G), lambda2(H)), read literally."""
    lg = vertex_laplacian_spectrum(g).lambda2 or 0.0
    lh = vertex_laplacian_spectrum(h).lambda2 or 0.0
    return min(len(g), len(h)) + min(lg, lh)


@dataclass(frozen=True)
class JoinEigenReport:
    order_eigenvalue: bool
    lambda2: Optional[float]
    lambda2_predicted: float
    lambda2_stated: Optional[float]
    lambda2_ok: bool
    stated_ok: Optional[bool]  # None when either part is disconnected
    multiple_ok: dict[int, bool]
    product_max_ok: dict[int, bool]

    @property
    def ok(self) -> bool:
        return (
            self.order_eigenvalue
            and self.lambda2_ok
            and all(self.multiple_ok.values())
            and all(self.product_max_ok.values())
        )


def join_eigen_checks(g: Graph, h: Graph, copies: tuple[int, ...] = (2, 3)) -> JoinEigenReport:
    if not g.vertices or not h.vertices:
        raise ValueError("both graphs must be nonempty")
    if len(g) + len(h) > MAX_VERTICES:
        raise ValueError("graphs too large")
    spectrum = vertex_laplacian_spectrum(zykov_join(g, h))
    order_ok = spectrum.contains(len(g) + len(h))

    connected = g.is_connected() and h.is_connected()
    predicted = join_lambda2(g, h)
    stated = stated_join_lambda2(g, h) if connected else None
    l2 = spectrum.lambda2
    lambda2_ok = abs(l2 - predicted) < COMPARE_TOL
    stated_ok = abs(l2 - stated) < COMPARE_TOL if connected else None

    multiple_ok = {}
    product_ok = {}
    for n in copies:
        ng = vertex_laplacian_spectrum(join_all([g] * n))
        multiple_ok[n] = ng.multiplicity_of(n * len(g)) >= n - 1
        kg = vertex_laplacian_spectrum(zykov_product(complete(n), g))
        product_ok[n] = abs(kg.maximum - n * len(g)) < COMPARE_TOL
    return JoinEigenReport(
        order_ok, l2, predicted, stated, lambda2_ok, stated_ok, multiple_ok, product_ok
    )
