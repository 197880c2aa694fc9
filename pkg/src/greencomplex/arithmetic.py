"""Zykov join, the ring product, Euler polynomials and additive primes."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import networkx as nx

from .complex import (
    Graph,
    SimplicialComplex,
    clique_counts,
    euler_characteristic,
    f_vector,
    fermi_characteristic,
    whitney_complex,
)

ISOMORPHISM_LIMIT = 40


class GraphTooLarge(ValueError):
    pass


def zykov_join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts.

    Labels of g are kept. Labels of h are kept when disjoint from g's,
    otherwise shifted past the largest label of g.
    """
    if set(g.vertices) & set(h.vertices):
        shift = max(g.vertices) + 1 - min(h.vertices)
        h = h.relabel({v: v + shift for v in h.vertices})
    cross = {(a, b) for a in g.vertices for b in h.vertices}
    return Graph(g.vertices + h.vertices, g.edges | h.edges | cross)


def join_all(graphs) -> Graph:
    out = Graph.empty()
    for g in graphs:
        out = zykov_join(out, g)
    return out


def zykov_product(g: Graph, h: Graph) -> Graph:
    """Vertices V(g) x V(h); adjacent when either coordinate pair is an edge.

    The pair at positions (i, j) gets label i * |V(h)| + j.
    """
    m = len(h.vertices)
    gi = {v: i for i, v in enumerate(g.vertices)}
    hj = {v: j for j, v in enumerate(h.vertices)}
    edges = set()
    for a, c in g.edges:
        for b, d in product(h.vertices, repeat=2):
            edges.add((gi[a] * m + hj[b], gi[c] * m + hj[d]))
    for b, d in h.edges:
        for a, c in product(g.vertices, repeat=2):
            edges.add((gi[a] * m + hj[b], gi[c] * m + hj[d]))
    return Graph(tuple(range(len(g.vertices) * m)), frozenset(edges))


# ---------------------------------------------------------------------------
# Polynomials and characters
# ---------------------------------------------------------------------------


def euler_polynomial(c: SimplicialComplex) -> tuple[int, ...]:
    """Coefficients of 1 + sum_k v_k x^(k+1), constant term first."""
    return (1,) + f_vector(c)


def graph_euler_polynomial(g: Graph) -> tuple[int, ...]:
    return (1,) + tuple(clique_counts(g))


def poly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def poly_eval(a: tuple[int, ...], x: int) -> int:
    return sum(c * x**k for k, c in enumerate(a))


def poincare_hopf_i(c: SimplicialComplex) -> int:
    """1 - chi(c), which equals f_c(-1)."""
    return 1 - euler_characteristic(c)


def facet_count(g: Graph) -> int:
    """Number of maximal cliques; the empty graph has one (empty) facet."""
    if not g.vertices:
        return 1
    return sum(1 for _ in nx.find_cliques(to_networkx(g)))


# ---------------------------------------------------------------------------
# Isomorphism and additive primes
# ---------------------------------------------------------------------------


def to_networkx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(g.vertices)
    out.add_edges_from(g.edges)
    return out


def isomorphic(g: Graph, h: Graph) -> bool:
    if max(len(g), len(h)) > ISOMORPHISM_LIMIT:
        raise GraphTooLarge(f"isomorphism test limited to {ISOMORPHISM_LIMIT} vertices")
    if len(g) != len(h) or len(g.edges) != len(h.edges):
        return False
    return nx.is_isomorphic(to_networkx(g), to_networkx(h))


def shape_key(g: Graph) -> tuple:
    """Isomorphism-invariant sort key (not a complete invariant)."""
    degrees = tuple(sorted(g.degree(v) for v in g.vertices))
    wl = nx.weisfeiler_lehman_graph_hash(to_networkx(g)) if g.vertices else ""
    return (len(g), len(g.edges), degrees, wl)


def additive_prime_decompose(g: Graph) -> list[Graph]:
    """Join factors from the connected components of the complement.

    Each factor is the induced subgraph on one complement component, so its
    own complement is connected and it cannot split further.
    """
    if not g.vertices:
        return []
    comps = g.complement().components()
    factors = [g.induced(comp) for comp in comps]
    return sorted(factors, key=lambda f: (shape_key(f), f.vertices))


def is_additive_prime(g: Graph) -> bool:
    return len(g.vertices) > 0 and g.complement().is_connected()


def distributivity_check(g: Graph, h: Graph, k: Graph) -> bool:
    """G * (H + K) is isomorphic to G * H + G * K."""
    left = zykov_product(g, zykov_join(h, k))
    right = zykov_join(zykov_product(g, h), zykov_product(g, k))
    return isomorphic(left, right)


# ---------------------------------------------------------------------------
# Fermi characteristic on join submonoids
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PsiJoinReport:
    case: str  # "even", "odd" or "not in a covered submonoid"
    chi: tuple[int, int, int]
    psi: tuple[int, int, int]
    holds: bool


def psi_join_submonoid_check(g: Graph, h: Graph) -> PsiJoinReport:
    parts = [whitney_complex(x) for x in (g, h, zykov_join(g, h))]
    chi = tuple(euler_characteristic(c) for c in parts)
    psi = tuple(fermi_characteristic(c) for c in parts)
    if chi[0] % 2 == 0 and chi[1] % 2 == 0:
        return PsiJoinReport("even", chi, psi, psi[2] == psi[0] * psi[1])
    if chi[0] % 2 == 1 and chi[1] % 2 == 1:
        return PsiJoinReport("odd", chi, psi, psi[2] == -1)
    return PsiJoinReport("not in a covered submonoid", chi, psi, False)

