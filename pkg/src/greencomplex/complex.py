"""Simplices, finite simple graphs and abstract simplicial complexes.

A simplex is a strictly increasing tuple of non-negative integer labels.
A complex is a finite set of simplices closed under taking nonempty subsets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

Simplex = tuple[int, ...]


def simplex(vertices: Iterable[int]) -> Simplex:
    """Canonical form of a simplex: sorted, duplicate free, nonempty."""
    s = tuple(sorted(set(int(v) for v in vertices)))
    if not s:
        raise ValueError("a simplex must be nonempty")
    if s[0] < 0:
        raise ValueError(f"vertex labels must be non-negative, got {s[0]}")
    return s


def dim(x: Simplex) -> int:
    return len(x) - 1


def omega(x: Simplex) -> int:
    """(-1)^dim(x)."""
    return -1 if len(x) % 2 == 0 else 1


def simplex_order(x: Simplex) -> tuple[int, Simplex]:
    """Sort key: dimension first, then lexicographic."""
    return (len(x), x)


def faces(x: Simplex) -> Iterator[Simplex]:
    """All nonempty subsets of x, including x itself."""
    for k in range(1, len(x) + 1):
        yield from combinations(x, k)


# ---------------------------------------------------------------------------
# Graphs
# ---------------------------------------------------------------------------


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on integer labels."""

    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        verts = tuple(int(v) for v in self.vertices)
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertex labels")
        vset = set(verts)
        edges = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u not in vset or v not in vset:
                raise ValueError(f"edge ({u}, {v}) has an endpoint that is not a vertex")
            edges.add(_edge(int(u), int(v)))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(edges))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> "Graph":
        edges = [tuple(e) for e in edges]
        verts = list(dict.fromkeys(vertices))
        seen = set(verts)
        for e in edges:
            for v in e:
                if v not in seen:
                    seen.add(v)
                    verts.append(v)
        return cls(tuple(sorted(verts)), frozenset(edges))

    @classmethod
    def empty(cls) -> "Graph":
        return cls((), frozenset())

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self.adjacency

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(n) for v, n in adj.items()}

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self.adjacency[v]
        except KeyError:
            raise KeyError(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency.get(u, ())

    def induced(self, subset: Iterable[int]) -> "Graph":
        keep = set(subset)
        verts = tuple(v for v in self.vertices if v in keep)
        edges = frozenset(e for e in self.edges if e[0] in keep and e[1] in keep)
        return Graph(verts, edges)

    def remove_vertex(self, v: int) -> "Graph":
        self.neighbors(v)
        return self.induced(u for u in self.vertices if u != v)

    def complement(self) -> "Graph":
        edges = frozenset(
            (u, v) for u, v in combinations(sorted(self.vertices), 2) if not self.has_edge(u, v)
        )
        return Graph(self.vertices, edges)

    def relabel(self, mapping: dict[int, int]) -> "Graph":
        return Graph(
            tuple(mapping[v] for v in self.vertices),
            frozenset(_edge(mapping[u], mapping[v]) for u, v in self.edges),
        )

    def normalized(self) -> "Graph":
        """Relabel vertices to 0..n-1 in their current order."""
        return self.relabel({v: i for i, v in enumerate(self.vertices)})

    def components(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            seen.add(s)
            stack, comp = [s], []
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adjacency[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def unit_sphere(g: Graph, x: int) -> Graph:
    """Induced subgraph on the neighbors of x."""
    return g.induced(g.neighbors(x))


# ---------------------------------------------------------------------------
# Clique enumeration
# ---------------------------------------------------------------------------


def _higher_neighbor_masks(g: Graph) -> tuple[list[int], list[int]]:
    order = list(g.vertices)
    index = {v: i for i, v in enumerate(order)}
    masks = [0] * len(order)
    for u, v in g.edges:
        i, j = index[u], index[v]
        if i < j:
            masks[i] |= 1 << j
        else:
            masks[j] |= 1 << i
    return order, masks


def iter_cliques(g: Graph) -> Iterator[Simplex]:
    """Every nonempty complete subgraph of g, each exactly once.

    Cliques are grown along increasing vertex index, so candidate sets are
    the higher neighbours common to every member.
    """
    order, masks = _higher_neighbor_masks(g)

    def grow(members: tuple[int, ...], cand: int) -> Iterator[tuple[int, ...]]:
        while cand:
            low = cand & -cand
            i = low.bit_length() - 1
            cand ^= low
            clique = members + (i,)
            yield clique
            yield from grow(clique, cand & masks[i])

    full = (1 << len(order)) - 1
    for clique in grow((), full):
        yield tuple(sorted(order[i] for i in clique))


def clique_counts(g: Graph) -> list[int]:
    """Number of cliques with k+1 vertices, for k = 0, 1, ..."""
    _, masks = _higher_neighbor_masks(g)
    counts: list[int] = []

    def grow(depth: int, cand: int) -> None:
        while cand:
            low = cand & -cand
            i = low.bit_length() - 1
            cand ^= low
            if depth == len(counts):
                counts.append(0)
            counts[depth] += 1
            grow(depth + 1, cand & masks[i])

    grow(0, (1 << len(g.vertices)) - 1)
    return counts


def graph_euler_characteristic(g: Graph) -> int:
    """Euler characteristic of the Whitney complex, without building it."""
    return sum((-1) ** k * v for k, v in enumerate(clique_counts(g)))


def clique_number(g: Graph) -> int:
    return len(clique_counts(g))


# ---------------------------------------------------------------------------
# Complexes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SimplicialComplex:
    """A finite set of canonical simplices.

    Construction canonicalizes but does not enforce closure; use
    :func:`validate` or :meth:`closure` for that.
    """

    simplices: frozenset[Simplex] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "simplices", frozenset(simplex(x) for x in self.simplices))

    @classmethod
    def closure(cls, generators: Iterable[Iterable[int]]) -> "SimplicialComplex":
        out: set[Simplex] = set()
        for g in generators:
            out.update(faces(simplex(g)))
        return cls(frozenset(out))

    def __len__(self) -> int:
        return len(self.simplices)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.ordered)

    def __contains__(self, x: object) -> bool:
        return x in self.simplices

    @cached_property
    def ordered(self) -> tuple[Simplex, ...]:
        """Simplices sorted by dimension, then lexicographically."""
        return tuple(sorted(self.simplices, key=simplex_order))

    @cached_property
    def vertex_set(self) -> tuple[int, ...]:
        return tuple(sorted({v for x in self.simplices for v in x}))

    @property
    def dimension(self) -> int:
        return max((dim(x) for x in self.simplices), default=-1)

    def facets(self) -> list[Simplex]:
        """Simplices not strictly contained in another simplex."""
        top = []
        for x in self.ordered:
            sx = set(x)
            if not any(len(y) > len(x) and sx.issubset(y) for y in self.simplices):
                top.append(x)
        return top

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return self.simplices <= other.simplices

    def __and__(self, other: "SimplicialComplex") -> "SimplicialComplex":
        return SimplicialComplex(self.simplices & other.simplices)

    def __or__(self, other: "SimplicialComplex") -> "SimplicialComplex":
        return SimplicialComplex(self.simplices | other.simplices)

    def remove(self, x: Simplex) -> "SimplicialComplex":
        return SimplicialComplex(self.simplices - {x})

    def skeleton_graph(self) -> Graph:
        edges = [x for x in self.simplices if len(x) == 2]
        return Graph.from_edges(edges, self.vertex_set)

    def to_json(self) -> str:
        return json.dumps([list(x) for x in self.ordered])

    @classmethod
    def from_json(cls, text: str) -> "SimplicialComplex":
        data = json.loads(text)
        if not isinstance(data, list):
            raise ValueError("complex JSON must be an array of integer arrays")
        return cls(frozenset(simplex(x) for x in data))


def whitney_complex(g: Graph) -> SimplicialComplex:
    """All vertex sets of complete subgraphs of g."""
    return SimplicialComplex(frozenset(iter_cliques(g)))


def closure_violations(c: SimplicialComplex) -> list[Simplex]:
    """Faces of members that are missing from the complex."""
    missing: set[Simplex] = set()
    for x in c.simplices:
        for i in range(len(x)):
            face = x[:i] + x[i + 1 :]
            if face and face not in c.simplices:
                missing.add(face)
    return sorted(missing, key=simplex_order)


def validate(c: SimplicialComplex) -> bool:
    # Codimension-one faces suffice: along any chain from a member down to a
    # missing face, the first missing link is a facet of a present simplex.
    return not closure_violations(c)


def f_vector(c: SimplicialComplex) -> tuple[int, ...]:
    counts = [0] * (c.dimension + 1)
    for x in c.simplices:
        counts[dim(x)] += 1
    return tuple(counts)


def euler_characteristic(c: SimplicialComplex) -> int:
    return sum(omega(x) for x in c.simplices)


def fermi_characteristic(c: SimplicialComplex) -> int:
    odd = sum(1 for x in c.simplices if len(x) % 2 == 0)
    return -1 if odd % 2 else 1


def inductive_dimension(g: Graph) -> Fraction:
    """Average over vertices of 1 + dim(S(x)); the empty graph has dimension -1."""
    adj = {v: frozenset(n) for v, n in g.adjacency.items()}
    memo: dict[frozenset[int], Fraction] = {frozenset(): Fraction(-1)}

    def rec(verts: frozenset[int]) -> Fraction:
        hit = memo.get(verts)
        if hit is not None:
            return hit
        total = sum((1 + rec(adj[v] & verts) for v in verts), Fraction(0))
        value = total / len(verts)
        memo[verts] = value
        return value

    return rec(frozenset(g.vertices))


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------


class EdgeListError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_edge_list(text: str) -> Graph:
    """Parse "u v" pairs, one per line; '#' starts a comment.

    A line holding a single label declares an isolated vertex.
    """
    edges: list[tuple[int, int]] = []
    verts: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            labels = [int(p) for p in parts]
        except ValueError:
            raise EdgeListError(lineno, f"expected integer labels, got {line!r}") from None
        if any(v < 0 for v in labels):
            raise EdgeListError(lineno, "labels must be non-negative")
        if len(labels) == 1:
            verts.append(labels[0])
        elif len(labels) == 2:
            u, v = labels
            if u == v:
                raise EdgeListError(lineno, f"loop at vertex {u}")
            edges.append((u, v))
        else:
            raise EdgeListError(lineno, f"expected 'u v', got {len(labels)} fields")
    return Graph.from_edges(edges, verts)


def format_edge_list(g: Graph) -> str:
    lines = [f"{u} {v}" for u, v in g.sorted_edges()]
    isolated = [v for v in g.vertices if not g.adjacency[v]]
    lines.extend(str(v) for v in isolated)
    return "\n".join(lines) + "\n"
