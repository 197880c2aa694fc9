import random

import pytest
from hypothesis import given, settings

from conftest import graphs
from greencomplex import corpus
from greencomplex.complex import SimplicialComplex, unit_sphere, whitney_complex
from greencomplex.fredholm import full_subcomplex
from greencomplex.refinement import (
    RefinementOverflow,
    barycentric,
    barycentric2,
    connection,
    intersection_refinement_check,
    positive_sphere_as_intersection,
    refined_inductive_dimension,
    refinement_size,
    stable_unstable,
)


def test_triangle_refinement():
    r = barycentric(whitney_complex(corpus.complete(3)))
    assert len(r.graph) == 7
    assert len(r.graph.edges) == 12
    assert r.simplex_of_vertex(6) == (0, 1, 2)
    assert r.vertex_of_simplex[(0, 1)] == 3


def test_refinement_rejects_non_complex():
    c = SimplicialComplex(frozenset({(0, 1)}))
    with pytest.raises(ValueError, match="not closed"):
        barycentric(c)
    with pytest.raises(ValueError):
        connection(c)


def test_unknown_vertex():
    r = barycentric(whitney_complex(corpus.complete(2)))
    with pytest.raises(KeyError):
        r.simplex_of_vertex(10)


def test_connection_of_path():
    # vertices 0,1,2 and edges 01,12: the two edges meet at vertex 1
    c = SimplicialComplex.closure([(0, 1), (1, 2)])
    cg = connection(c)
    names = cg.simplices
    edges = {(names[a], names[b]) for a, b in cg.graph.edges}
    assert ((0, 1), (1, 2)) in edges
    assert ((0,), (1,)) not in edges
    assert len(cg.graph.edges) == 5


@given(graphs(min_vertices=1, max_vertices=6))
@settings(max_examples=40, deadline=None)
def test_refinement_edges_are_strict_inclusions(g):
    r = barycentric(whitney_complex(g))
    for a, b in r.graph.edges:
        x, y = set(r.simplices[a]), set(r.simplices[b])
        assert x < y or y < x


@given(graphs(min_vertices=1, max_vertices=6))
@settings(max_examples=40, deadline=None)
def test_connection_edges_are_intersections(g):
    cg = connection(whitney_complex(g))
    n = len(cg.simplices)
    for i in range(n):
        for j in range(i + 1, n):
            meet = bool(set(cg.simplices[i]) & set(cg.simplices[j]))
            assert cg.graph.has_edge(i, j) == meet


@given(graphs(min_vertices=1, max_vertices=6))
@settings(max_examples=30, deadline=None)
def test_sphere_splits_into_stable_and_unstable(g):
    r = barycentric(whitney_complex(g))
    for v in r.graph.vertices:
        d = stable_unstable(r, v)
        assert set(d.stable.vertices) | set(d.unstable.vertices) == set(d.sphere.vertices)
        # every face is below every coface, so the sphere is their join
        assert len(d.sphere.edges) == (
            len(d.stable.edges) + len(d.unstable.edges) + len(d.stable) * len(d.unstable)
        )


@given(graphs(min_vertices=1, max_vertices=6))
@settings(max_examples=30, deadline=None)
def test_positive_sphere_is_intersection(g):
    r = barycentric(whitney_complex(g))
    for v in r.graph.vertices:
        if r.dimension_of(v) == 0:
            continue
        assert positive_sphere_as_intersection(r, v) == stable_unstable(r, v).unstable


def test_intersection_refinement():
    rng = random.Random(5)
    for g in corpus.random_graphs(30, 8, 7):
        c = whitney_complex(g)
        h = full_subcomplex(c, [v for v in g.vertices if rng.random() < 0.6])
        k = full_subcomplex(c, [v for v in g.vertices if rng.random() < 0.6])
        assert intersection_refinement_check(c, h, k)


def test_second_refinement_chains():
    c = whitney_complex(corpus.complete(2))
    r2 = barycentric2(c)
    assert len(r2.graph) == 3 + 2  # vertices and edges of the refined path
    for v in r2.graph.vertices:
        chain = r2.chain(v)
        assert all(set(a) < set(b) for a, b in zip(chain, chain[1:]))


def test_second_refinement_budget():
    c = whitney_complex(corpus.complete(4))
    assert refinement_size(barycentric(c).graph) == 15 + 50 + 60 + 24
    with pytest.raises(RefinementOverflow):
        barycentric2(c, budget=100)


def test_refined_size_fixtures():
    from greencomplex.arithmetic import zykov_join

    c4c4 = barycentric(whitney_complex(zykov_join(corpus.cycle(4), corpus.cycle(4))))
    assert len(c4c4.graph) == 80
    p3p3 = barycentric(whitney_complex(zykov_join(corpus.points(3), corpus.points(3)))).graph
    assert (len(p3p3), len(p3p3.edges)) == (15, 18)


def test_refined_inductive_dimension():
    assert refined_inductive_dimension(whitney_complex(corpus.complete(3))) == 2
    assert refined_inductive_dimension(whitney_complex(corpus.cycle(4))) == 1


def test_json():
    r = barycentric2(whitney_complex(corpus.complete(2)))
    d = r.to_dict()
    assert d["vertices"] == len(r.graph)
    assert "chains" in d
    assert r.to_json() == r.to_json()


def test_unit_sphere_of_refined_edge_vertex():
    r = barycentric(whitney_complex(corpus.complete(2)))
    # the edge's sphere in G1 is its two endpoints
    assert len(unit_sphere(r.graph, r.vertex_of_simplex[(0, 1)])) == 2


@pytest.mark.parametrize(
    "g", [corpus.complete(3), corpus.windmill(), corpus.cycle(5), corpus.bowtie(), corpus.star(4)]
)
def test_sphere_betti_sets_survive_second_refinement(g):
    # stronger than the chi-level statement; kept as an experimental check
    from greencomplex.homology import betti

    def betti_set(r):
        return {betti(whitney_complex(unit_sphere(r.graph, v))) for v in r.graph.vertices}

    c = whitney_complex(g)
    assert betti_set(barycentric(c)) == betti_set(barycentric2(c))
