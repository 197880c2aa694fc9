"""Prime graphs on square-free integers.

In G_n two square-free integers in [2, n] are adjacent when one divides the
other; in H_n when they share a prime factor. They are the Barycentric
refinement and the connection graph of the complex whose simplices are the
prime-factor sets of those integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .complex import Graph, SimplicialComplex, graph_euler_characteristic, unit_sphere, whitney_complex
from .fredholm import GreenReport, GreenRow, det_exact, green_inverse
from .homology import betti
from .refinement import barycentric, connection

DEFAULT_GRAPH_CAP = 500
DEFAULT_MATRIX_CAP = 300


def smallest_prime_factors(n: int) -> list[int]:
    spf = list(range(n + 1))
    p = 2
    while p * p <= n:
        if spf[p] == p:
            for q in range(p * p, n + 1, p):
                if spf[q] == q:
                    spf[q] = p
        p += 1
    return spf


def squarefree_factorizations(n: int) -> dict[int, tuple[int, ...]]:
    """Prime-factor tuples of the square-free integers in [2, n]."""
    spf = smallest_prime_factors(n)
    out = {}
    for k in range(2, n + 1):
        primes, m = [], k
        while m > 1:
            p = spf[m]
            m //= p
            if m % p == 0:
                break
            primes.append(p)
        else:
            out[k] = tuple(primes)
    return out


def mobius_sieve(n: int) -> list[int]:
    """mu(0..n) by the classical sieve, independent of the factor tables."""
    mu = [1] * (n + 1)
    mu[0] = 0
    is_composite = [False] * (n + 1)
    for p in range(2, n + 1):
        if is_composite[p]:
            continue
        for q in range(p, n + 1, p):
            if q > p:
                is_composite[q] = True
            mu[q] = -mu[q]
        for q in range(p * p, n + 1, p * p):
            mu[q] = 0
    return mu


def mertens(n: int) -> int:
    return sum(mobius_sieve(n)[1:])


def _product(xs: tuple[int, ...]) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


@dataclass(frozen=True)
class PrimePanel:
    n: int
    squarefree: tuple[int, ...]
    factors: dict[int, tuple[int, ...]]
    g_n: Graph
    h_n: Graph
    complex: SimplicialComplex


def build_panel(n: int, cap: int = DEFAULT_GRAPH_CAP) -> PrimePanel:
    if n < 2:
        raise ValueError("n must be at least 2")
    if n > cap:
        raise ValueError(f"graphs are only materialized up to n = {cap}")
    factors = squarefree_factorizations(n)
    verts = tuple(sorted(factors))
    div_edges, gcd_edges = [], []
    for i, a in enumerate(verts):
        for b in verts[i + 1 :]:
            if b % a == 0:
                div_edges.append((a, b))
            if gcd(a, b) > 1:
                gcd_edges.append((a, b))
    g_n = Graph(verts, frozenset(div_edges))
    h_n = Graph(verts, frozenset(gcd_edges))
    cx = SimplicialComplex(frozenset(factors.values()))
    panel = PrimePanel(n, verts, factors, g_n, h_n, cx)
    _check_identifications(panel)
    return panel


def _check_identifications(p: PrimePanel) -> None:
    """G_n and H_n must be the refinement and connection graph, label for label."""
    for refined, target in ((barycentric(p.complex), p.g_n), (connection(p.complex), p.h_n)):
        label = {v: _product(x) for v, x in enumerate(refined.simplices)}
        relabeled = refined.graph.relabel(label)
        if set(relabeled.vertices) != set(target.vertices) or relabeled.edges != target.edges:
            raise AssertionError(f"prime panel n={p.n}: refinement does not match")


def prime_green_check(p: PrimePanel, matrix_cap: int = DEFAULT_MATRIX_CAP) -> GreenReport:
    """Compare 1 - chi(S(x)) in G_n with the diagonal of (1 + A(H_n))^-1."""
    size = len(p.squarefree)
    if size > matrix_cap:
        raise ValueError(f"matrix of order {size} exceeds cap {matrix_cap}")
    pos = {x: i for i, x in enumerate(p.squarefree)}
    m = [[int(i == j) for j in range(size)] for i in range(size)]
    for a, b in p.h_n.edges:
        m[pos[a]][pos[b]] = m[pos[b]][pos[a]] = 1
    det = det_exact(m)
    inv = green_inverse(m)
    rows = []
    for x in p.squarefree:
        i = 1 - graph_euler_characteristic(unit_sphere(p.g_n, x))
        g = inv[pos[x]][pos[x]]
        rows.append(GreenRow(x, p.factors[x], len(p.factors[x]) - 1, i, g, i == g))
    return GreenReport(tuple(rows), det, fredholm_signature(p.n))


def euler_characteristic_streamed(n: int) -> int:
    """chi of the prime complex, summing omega over square-free k <= n."""
    return sum(1 if len(f) % 2 else -1 for f in squarefree_factorizations(n).values())


def fredholm_signature(n: int) -> int:
    """prod omega(x) over the prime complex, i.e. prod -mu(k)."""
    odd = sum(1 for f in squarefree_factorizations(n).values() if len(f) % 2 == 0)
    return -1 if odd % 2 else 1


def mertens_euler(n: int) -> tuple[int, int]:
    """(chi of the prime complex, 1 - M(n))."""
    return euler_characteristic_streamed(n), 1 - mertens(n)


@dataclass(frozen=True)
class SphereAtPrime:
    x: int
    vertices: tuple[int, ...]
    edges: int
    betti: tuple[int, ...]
    chi: int
    index: int
    green: int


def sphere_at(p: PrimePanel, x: int) -> SphereAtPrime:
    if x not in p.factors:
        raise KeyError(f"{x} is not a square-free vertex of G_{p.n}")
    s = unit_sphere(p.g_n, x)
    chi = graph_euler_characteristic(s)
    report = prime_green_check(p)
    green = next(r.green for r in report.rows if r.vertex == x)
    return SphereAtPrime(x, s.vertices, len(s.edges), betti(whitney_complex(s)), chi, 1 - chi, green)
