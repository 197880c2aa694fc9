"""Evako contractibility and sphere recognition, plus sphere spectra.

Every graph visited by the recursion is an induced subgraph of the input
(unit spheres and vertex deletions never leave it), so subproblems are keyed
by vertex bitmasks of the host graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .complex import Graph, SimplicialComplex, unit_sphere, whitney_complex
from .homology import betti
from .fredholm import sphere_indices
from .refinement import barycentric

DEFAULT_NODE_BUDGET = 1_000_000
DEFAULT_MAX_VERTICES = 30

SPHERE = "sphere"
CONTRACTIBLE = "contractible"
NEITHER = "neither"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class SphereVerdict:
    status: str
    dimension: Optional[int] = None
    certificate: tuple[int, ...] = ()
    budget_exhausted: bool = False

    @property
    def is_sphere(self) -> bool:
        return self.status == SPHERE

    @property
    def is_contractible(self) -> bool:
        return self.status == CONTRACTIBLE

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "dimension": self.dimension,
            "certificate": list(self.certificate),
            "budget_exhausted": self.budget_exhausted,
        }


class _Exhausted(Exception):
    pass


@dataclass
class _Search:
    graph: Graph
    budget: int
    nodes: int = 0
    order: list[int] = field(init=False)
    nbr: list[int] = field(init=False)
    _chi: dict[int, int] = field(default_factory=dict)
    _contractible: dict[int, Optional[int]] = field(default_factory=dict)
    _sphere: dict[int, Optional[int]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.order = list(self.graph.vertices)
        index = {v: i for i, v in enumerate(self.order)}
        self.nbr = [0] * len(self.order)
        for u, v in self.graph.edges:
            self.nbr[index[u]] |= 1 << index[v]
            self.nbr[index[v]] |= 1 << index[u]

    @property
    def full(self) -> int:
        return (1 << len(self.order)) - 1

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _Exhausted

    @staticmethod
    def _bits(mask: int):
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def connected(self, mask: int) -> bool:
        if not mask:
            return True
        seen = mask & -mask
        frontier = seen
        while frontier:
            grow = 0
            for i in self._bits(frontier):
                grow |= self.nbr[i]
            frontier = grow & mask & ~seen
            seen |= frontier
        return seen == mask

    def chi(self, mask: int) -> int:
        hit = self._chi.get(mask)
        if hit is not None:
            return hit
        total = 0

        def grow(sign: int, cand: int) -> None:
            nonlocal total
            while cand:
                low = cand & -cand
                i = low.bit_length() - 1
                cand ^= low
                total += sign
                grow(-sign, cand & self.nbr[i])

        grow(1, mask)
        self._chi[mask] = total
        return total

    def contractible(self, mask: int) -> bool:
        """Stores the removed vertex that witnesses contractibility (-1 for K1)."""
        if mask in self._contractible:
            return self._contractible[mask] is not None
        self._tick()
        result: Optional[int] = None
        if mask and not mask & (mask - 1):
            result = -1
        elif mask and self.connected(mask) and self.chi(mask) == 1:
            # Small unit spheres first: they are cheapest to decide.
            cands = sorted(self._bits(mask), key=lambda i: bin(self.nbr[i] & mask).count("1"))
            for i in cands:
                rest = mask & ~(1 << i)
                if self.contractible(self.nbr[i] & mask) and self.contractible(rest):
                    result = i
                    break
        self._contractible[mask] = result
        return result is not None

    def removal_sequence(self, mask: int) -> tuple[int, ...]:
        seq = []
        while True:
            i = self._contractible.get(mask)
            if i is None or i == -1:
                break
            seq.append(self.order[i])
            mask &= ~(1 << i)
        return tuple(seq)

    def sphere_dim(self, mask: int, strict: bool) -> Optional[int]:
        if mask in self._sphere:
            return self._sphere[mask]
        self._tick()
        result: Optional[int] = None
        if not mask:
            result = -1
        else:
            dims = set()
            for i in self._bits(mask):
                d = self.sphere_dim(self.nbr[i] & mask, strict)
                if d is None:
                    dims = None
                    break
                dims.add(d)
                if len(dims) > 1:
                    break
            if dims is not None and len(dims) == 1:
                d = dims.pop() + 1
                chi_ok = self.chi(mask) == (2 if d % 2 == 0 else 0)
                if chi_ok:
                    removals = (self.contractible(mask & ~(1 << i)) for i in self._bits(mask))
                    if (all if strict else any)(removals):
                        result = d
        self._sphere[mask] = result
        return result

    def sphere_witness(self, mask: int) -> tuple[int, ...]:
        for i in self._bits(mask):
            rest = mask & ~(1 << i)
            if self._contractible.get(rest) is not None:
                return (self.order[i],) + self.removal_sequence(rest)
        return ()


def is_contractible(
    g: Graph, budget: int = DEFAULT_NODE_BUDGET, max_vertices: int = DEFAULT_MAX_VERTICES
) -> SphereVerdict:
    if len(g) > max_vertices:
        return SphereVerdict(UNKNOWN, budget_exhausted=True)
    s = _Search(g, budget)
    try:
        ok = s.contractible(s.full)
    except _Exhausted:
        return SphereVerdict(UNKNOWN, budget_exhausted=True)
    if ok:
        return SphereVerdict(CONTRACTIBLE, certificate=s.removal_sequence(s.full))
    return SphereVerdict(NEITHER)


def is_sphere(
    g: Graph,
    budget: int = DEFAULT_NODE_BUDGET,
    strict: bool = False,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> SphereVerdict:
    """Recognize an Evako d-sphere.

    ``strict`` demands that deleting any vertex leaves a contractible graph;
    otherwise one such vertex suffices.
    """
    if len(g) > max_vertices:
        return SphereVerdict(UNKNOWN, budget_exhausted=True)
    s = _Search(g, budget)
    try:
        d = s.sphere_dim(s.full, strict)
        if d is not None:
            return SphereVerdict(SPHERE, dimension=d, certificate=s.sphere_witness(s.full))
        if s.contractible(s.full):
            return SphereVerdict(CONTRACTIBLE, certificate=s.removal_sequence(s.full))
    except _Exhausted:
        return SphereVerdict(UNKNOWN, budget_exhausted=True)
    return SphereVerdict(NEITHER)


# ---------------------------------------------------------------------------
# Sphere spectra
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SphereSpectrum:
    indices: tuple[int, ...]  # i(x) = 1 - chi(S(x)) per vertex of G1
    dims: tuple[int, ...]
    bettis: tuple[tuple[int, ...], ...]

    @property
    def spectrum(self) -> list[int]:
        return sorted(set(self.indices))

    @property
    def vertex_spectrum(self) -> list[int]:
        """Values at the vertices of G1 that come from original vertices."""
        return sorted({i for i, d in zip(self.indices, self.dims) if d == 0})

    @property
    def betti_spectrum(self) -> list[tuple[int, ...]]:
        return sorted(set(self.bettis))

    def to_dict(self) -> dict:
        return {
            "spectrum": self.spectrum,
            "vertex_spectrum": self.vertex_spectrum,
            "betti_spectrum": [list(b) for b in self.betti_spectrum],
            "indices": list(self.indices),
        }


def sphere_spectrum(c: SimplicialComplex) -> SphereSpectrum:
    r = barycentric(c)
    indices = sphere_indices(r)
    dims = tuple(r.dimension_of(v) for v in r.graph.vertices)
    bettis = tuple(betti(whitney_complex(unit_sphere(r.graph, v))) for v in r.graph.vertices)
    return SphereSpectrum(tuple(indices), dims, bettis)
