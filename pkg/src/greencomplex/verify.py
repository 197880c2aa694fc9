"""Invariant suite over the built-in corpus, used by ``verify-all``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import corpus
from .arithmetic import (
    graph_euler_polynomial,
    isomorphic,
    poly_mul,
    psi_join_submonoid_check,
    zykov_join,
    zykov_product,
)
from .complex import (
    Graph,
    clique_number,
    euler_characteristic,
    fermi_characteristic,
    graph_euler_characteristic,
    whitney_complex,
)
from .fredholm import full_subcomplex, green_report, psi_attach_cell, psi_remove_cell, sphere_indices
from .homology import betti, boundary_squares_vanish, chain_complex
from .primegraphs import build_panel, mertens_euler, prime_green_check
from .refinement import barycentric, barycentric2
from .spectral import join_eigen_checks
from .spheres import is_sphere, sphere_spectrum


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    cases: int
    failures: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "failures": list(self.failures),
        }


def _run(name: str, cases, test: Callable) -> CheckResult:
    failures = []
    count = 0
    for label, case in cases:
        count += 1
        if not test(case):
            failures.append(label)
    return CheckResult(name, not failures, count, tuple(failures[:10]))


def _graphs(seed: int, count: int, max_vertices: int = 8):
    return [(f"er{i}", g) for i, g in enumerate(corpus.random_graphs(count, seed, max_vertices))]


def _pairs(seed: int, count: int, max_vertices: int = 5):
    gs = corpus.random_graphs(2 * count, seed, max_vertices)
    return [(f"pair{i}", (gs[2 * i], gs[2 * i + 1])) for i in range(count)]


def check_green(seed: int) -> CheckResult:
    def test(g: Graph) -> bool:
        return green_report(whitney_complex(g)).ok

    return _run("green-diagonal", _graphs(seed, 40), test)


def check_twins(seed: int) -> CheckResult:
    rng = random.Random(seed)

    def test(g: Graph) -> bool:
        c = whitney_complex(g)
        if not all(a == b for a, b in (psi_remove_cell(c, x) for x in c.facets())):
            return False
        for _ in range(3):
            vs = [v for v in g.vertices if rng.random() < 0.5]
            a, b = psi_attach_cell(c, full_subcomplex(c, vs))
            if a != b:
                return False
        return True

    return _run("cell-identities", _graphs(seed + 1, 30), test)


def check_homology(seed: int) -> CheckResult:
    def test(g: Graph) -> bool:
        c = whitney_complex(g)
        b = betti(c)
        alt = sum((-1) ** k * x for k, x in enumerate(b))
        return boundary_squares_vanish(chain_complex(c)) and alt == euler_characteristic(c)

    return _run("euler-poincare", _graphs(seed + 2, 40), test)


def check_join_algebra(seed: int) -> CheckResult:
    def test(pair) -> bool:
        g, h = pair
        j = zykov_join(g, h)
        if graph_euler_polynomial(j) != poly_mul(graph_euler_polynomial(g), graph_euler_polynomial(h)):
            return False
        chi = [graph_euler_characteristic(x) for x in (g, h, j)]
        if 1 - chi[2] != (1 - chi[0]) * (1 - chi[1]):
            return False
        if clique_number(j) != clique_number(g) + clique_number(h):
            return False
        return psi_join_submonoid_check(g, h).case.startswith("not") or psi_join_submonoid_check(g, h).holds

    return _run("join-algebra", _pairs(seed + 3, 40), test)


def check_fixtures(seed: int) -> CheckResult:
    oct_ = corpus.octahedron()
    p2 = corpus.points(2)
    rp2 = whitney_complex(corpus.projective_plane())
    cases = [
        ("c4+c4", lambda: len(barycentric(whitney_complex(zykov_join(corpus.cycle(4), corpus.cycle(4)))).graph) == 80),
        ("p3+p3", lambda: (lambda r: (len(r), len(r.edges)) == (15, 18))(
            barycentric(whitney_complex(zykov_join(corpus.points(3), corpus.points(3)))).graph)),
        ("windmill", lambda: 2 in sphere_spectrum(whitney_complex(corpus.windmill())).spectrum),  # chi(S(x)) = -1
        ("octahedron", lambda: isomorphic(oct_, zykov_product(corpus.complete(3), p2))
            and isomorphic(oct_, zykov_join(zykov_join(p2, p2), p2))),
        ("projective-plane", lambda: (len(rp2.ordered), euler_characteristic(rp2), fermi_characteristic(rp2))
            == (85, 1, 1)),
    ]
    return _run("fixtures", [(n, f) for n, f in cases], lambda f: f())


def check_spheres(seed: int) -> CheckResult:
    atoms = {"P2": corpus.points(2), "C4": corpus.cycle(4), "C5": corpus.cycle(5), "Oct": corpus.octahedron()}
    dims = {"P2": 0, "C4": 1, "C5": 1, "Oct": 2}
    cases = [
        (f"{a}+{b}", (atoms[a], atoms[b], dims[a] + dims[b] + 1))
        for a in atoms for b in atoms if a <= b
    ]

    def test(case) -> bool:
        g, h, d = case
        v = is_sphere(zykov_join(g, h))
        return v.is_sphere and v.dimension == d

    return _run("sphere-joins", cases, test)


def check_invariance(seed: int) -> CheckResult:
    cases = [
        ("K3", corpus.complete(3)),
        ("windmill", corpus.windmill()),
        ("C5", corpus.cycle(5)),
        ("bowtie", corpus.bowtie()),
    ]

    def test(g: Graph) -> bool:
        c = whitney_complex(g)
        r2 = barycentric2(c)
        s1 = set(sphere_spectrum(c).spectrum)
        return s1 == set(sphere_indices(r2))

    return _run("sphere-spectrum-invariance", cases, test)


def check_spectral(seed: int) -> CheckResult:
    def test(pair) -> bool:
        g, h = pair
        if not g.vertices or not h.vertices:
            return True
        return join_eigen_checks(g, h).ok

    return _run("join-spectra", _pairs(seed + 4, 30), test)


def check_primes(seed: int) -> CheckResult:
    cases = [(f"green{n}", ("green", n)) for n in (10, 30, 60)]
    cases += [(f"mertens{n}", ("mertens", n)) for n in (10, 100, 1000)]

    def test(case) -> bool:
        kind, n = case
        if kind == "green":
            return prime_green_check(build_panel(n)).ok
        chi, rhs = mertens_euler(n)
        return chi == rhs

    return _run("prime-graphs", cases, test)


CHECKS: tuple[Callable[[int], CheckResult], ...] = (
    check_green,
    check_twins,
    check_homology,
    check_join_algebra,
    check_fixtures,
    check_spheres,
    check_invariance,
    check_spectral,
    check_primes,
)


def verify_all(seed: int = 0) -> list[CheckResult]:
    return [check(seed) for check in CHECKS]
