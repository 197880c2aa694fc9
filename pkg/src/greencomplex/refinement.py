"""Barycentric refinements, connection graphs and unit sphere splittings."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Optional

from .complex import (
    Graph,
    Simplex,
    SimplicialComplex,
    clique_counts,
    closure_violations,
    inductive_dimension,
    unit_sphere,
    whitney_complex,
)

DEFAULT_SIMPLEX_BUDGET = 200_000


class RefinementOverflow(RuntimeError):
    """Raised when a refinement would exceed the simplex budget."""


@dataclass(frozen=True)
class RefinedGraph:
    """A graph whose vertices stand for the simplices of a source complex.

    Vertex ``i`` is the ``i``-th simplex of the source in (dimension,
    lexicographic) order. ``parent`` is set for a second refinement, whose
    source simplices are themselves vertex sets of ``parent.graph``.
    """

    graph: Graph
    simplices: tuple[Simplex, ...]
    parent: Optional["RefinedGraph"] = None

    @cached_property
    def vertex_of_simplex(self) -> dict[Simplex, int]:
        return {x: i for i, x in enumerate(self.simplices)}

    def simplex_of_vertex(self, v: int) -> Simplex:
        try:
            return self.simplices[v]
        except (IndexError, TypeError):
            raise KeyError(f"unknown vertex {v}") from None

    def dimension_of(self, v: int) -> int:
        return len(self.simplex_of_vertex(v)) - 1

    def chain(self, v: int) -> tuple[Simplex, ...]:
        """For a second refinement: the nested chain of original simplices.

        The chain is ordered by inclusion, smallest first.
        """
        if self.parent is None:
            return (self.simplex_of_vertex(v),)
        inner = [self.parent.simplex_of_vertex(u) for u in self.simplex_of_vertex(v)]
        return tuple(sorted(inner, key=len))

    def to_dict(self) -> dict:
        out = {
            "vertices": len(self.simplices),
            "edges": [list(e) for e in self.graph.sorted_edges()],
            "simplex_of_vertex": {str(i): list(x) for i, x in enumerate(self.simplices)},
        }
        if self.parent is not None:
            out["chains"] = {
                str(i): [list(x) for x in self.chain(i)] for i in range(len(self.simplices))
            }
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


ConnectionGraph = RefinedGraph


@dataclass(frozen=True)
class SphereDecomposition:
    center: int
    sphere: Graph
    stable: Graph
    unstable: Graph


def _require_complex(c: SimplicialComplex) -> None:
    missing = closure_violations(c)
    if missing:
        raise ValueError(f"not closed under subsets; missing {missing[:5]}")


def barycentric(c: SimplicialComplex) -> RefinedGraph:
    """Vertices are simplices; edges join strictly nested pairs."""
    _require_complex(c)
    simplices = c.ordered
    index = {x: i for i, x in enumerate(simplices)}
    edges = []
    for i, x in enumerate(simplices):
        for k in range(1, len(x)):
            for face in combinations(x, k):
                edges.append((index[face], i))
    graph = Graph(tuple(range(len(simplices))), frozenset(edges))
    return RefinedGraph(graph, simplices)


def refinement_size(g: Graph) -> int:
    """Number of simplices in the Whitney complex of g."""
    return sum(clique_counts(g))


def barycentric2(
    c: SimplicialComplex, budget: int = DEFAULT_SIMPLEX_BUDGET
) -> RefinedGraph:
    """Second Barycentric refinement, keeping the chain provenance."""
    first = barycentric(c)
    size = refinement_size(first.graph)
    if size > budget:
        raise RefinementOverflow(
            f"second refinement needs {size} simplices, budget is {budget}"
        )
    second = barycentric(whitney_complex(first.graph))
    return RefinedGraph(second.graph, second.simplices, parent=first)


def connection(c: SimplicialComplex) -> RefinedGraph:
    """Vertices are simplices; edges join distinct intersecting pairs."""
    _require_complex(c)
    simplices = c.ordered
    containing: dict[int, list[int]] = {}
    for i, x in enumerate(simplices):
        for v in x:
            containing.setdefault(v, []).append(i)
    edges = set()
    for members in containing.values():
        edges.update(combinations(members, 2))
    graph = Graph(tuple(range(len(simplices))), frozenset(edges))
    return RefinedGraph(graph, simplices)


def stable_unstable(r: RefinedGraph, x: int) -> SphereDecomposition:
    """Split S(x) by dimension: faces of x below, cofaces of x above."""
    sphere = unit_sphere(r.graph, x)
    size = len(r.simplex_of_vertex(x))
    below = [y for y in sphere.vertices if len(r.simplices[y]) < size]
    above = [y for y in sphere.vertices if len(r.simplices[y]) > size]
    return SphereDecomposition(x, sphere, sphere.induced(below), sphere.induced(above))


def positive_sphere_as_intersection(r: RefinedGraph, x: int) -> Graph:
    """Intersect the unit spheres of the original vertices of x.

    Every such sphere also contains x itself once x has positive dimension,
    so x is dropped from the intersection.
    """
    sx = r.simplex_of_vertex(x)
    common: Optional[frozenset[int]] = None
    for v in sx:
        nbrs = r.graph.neighbors(r.vertex_of_simplex[(v,)])
        common = nbrs if common is None else common & nbrs
    assert common is not None
    return r.graph.induced(common - {x})


def subcomplex_vertices(r: RefinedGraph, h: SimplicialComplex) -> list[int]:
    return [r.vertex_of_simplex[x] for x in h.ordered]


def intersection_refinement_check(
    c: SimplicialComplex, h: SimplicialComplex, k: SimplicialComplex
) -> bool:
    """Refining H ∩ K gives the intersection of the refined H and K."""
    for name, sub in (("h", h), ("k", k)):
        if not sub.is_subcomplex_of(c):
            raise ValueError(f"{name} is not a subcomplex")
        _require_complex(sub)
    r = barycentric(c)
    h1 = r.graph.induced(subcomplex_vertices(r, h))
    k1 = r.graph.induced(subcomplex_vertices(r, k))
    meet_vertices = set(h1.vertices) & set(k1.vertices)
    meet_edges = h1.edges & k1.edges

    inner = barycentric(h & k)
    to_outer = {i: r.vertex_of_simplex[x] for i, x in enumerate(inner.simplices)}
    lifted_vertices = set(to_outer.values())
    lifted_edges = {tuple(sorted((to_outer[a], to_outer[b]))) for a, b in inner.graph.edges}
    return lifted_vertices == meet_vertices and lifted_edges == set(meet_edges)


def refined_inductive_dimension(c: SimplicialComplex) -> Fraction:
    """Inductive dimension of the complex, measured on its refinement graph."""
    return inductive_dimension(barycentric(c).graph)
