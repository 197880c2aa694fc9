from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import graphs
from oracles import brute_cliques
from greencomplex import corpus
from greencomplex.complex import (
    EdgeListError,
    Graph,
    SimplicialComplex,
    clique_counts,
    clique_number,
    closure_violations,
    euler_characteristic,
    f_vector,
    fermi_characteristic,
    format_edge_list,
    graph_euler_characteristic,
    inductive_dimension,
    iter_cliques,
    omega,
    parse_edge_list,
    simplex,
    unit_sphere,
    validate,
    whitney_complex,
)


class TestSimplex:
    def test_canonical_form(self):
        assert simplex([3, 1, 1, 2]) == (1, 2, 3)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            simplex([])

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            simplex([-1, 2])

    def test_omega_alternates(self):
        assert [omega(x) for x in [(0,), (0, 1), (0, 1, 2)]] == [1, -1, 1]


class TestGraph:
    def test_edges_normalized(self):
        g = Graph((0, 1), frozenset({(1, 0)}))
        assert g.edges == {(0, 1)}

    @pytest.mark.parametrize("edges", [{(0, 0)}, {(0, 5)}])
    def test_invalid_edges(self, edges):
        with pytest.raises(ValueError):
            Graph((0, 1), frozenset(edges))

    def test_duplicate_vertices(self):
        with pytest.raises(ValueError):
            Graph((0, 0))

    def test_unknown_vertex(self):
        with pytest.raises(KeyError, match="unknown vertex"):
            corpus.complete(3).neighbors(7)

    def test_complement_of_octahedron_is_matching(self):
        comp = corpus.octahedron().complement()
        assert len(comp.edges) == 3
        assert len(comp.components()) == 3

    def test_unit_sphere(self):
        s = unit_sphere(corpus.star(4), 0)
        assert s.vertices == (1, 2, 3, 4) and not s.edges

    def test_empty_graph(self):
        g = Graph.empty()
        assert len(g) == 0 and g.is_connected()


class TestCliques:
    @given(graphs())
    @settings(max_examples=80, deadline=None)
    def test_matches_brute_force(self, g):
        assert set(iter_cliques(g)) == brute_cliques(g.vertices, g.edges)

    @given(graphs())
    @settings(max_examples=80, deadline=None)
    def test_counts_match_listing(self, g):
        cs = list(iter_cliques(g))
        counts = clique_counts(g)
        assert sum(counts) == len(cs)
        assert graph_euler_characteristic(g) == sum(omega(x) for x in cs)

    def test_clique_number(self):
        assert clique_number(corpus.complete(5)) == 5
        assert clique_number(corpus.cycle(5)) == 2
        assert clique_number(Graph.empty()) == 0


class TestComplex:
    def test_closure(self):
        c = SimplicialComplex.closure([(0, 1, 2)])
        assert f_vector(c) == (3, 3, 1)
        assert validate(c)

    def test_closure_violations(self):
        c = SimplicialComplex(frozenset({(0, 1, 2), (0,), (1,), (2,)}))
        assert closure_violations(c) == [(0, 1), (0, 2), (1, 2)]
        assert not validate(c)

    def test_ordering(self):
        c = SimplicialComplex.closure([(0, 1), (1, 2)])
        assert c.ordered == ((0,), (1,), (2,), (0, 1), (1, 2))

    def test_facets(self):
        c = whitney_complex(corpus.bowtie())
        assert c.facets() == [(0, 1, 2), (0, 3, 4)]

    def test_json_round_trip(self):
        c = whitney_complex(corpus.windmill())
        assert SimplicialComplex.from_json(c.to_json()) == c

    def test_from_json_rejects_objects(self):
        with pytest.raises(ValueError):
            SimplicialComplex.from_json('{"a": 1}')

    def test_set_operations(self):
        a = SimplicialComplex.closure([(0, 1)])
        b = SimplicialComplex.closure([(1, 2)])
        assert (a & b).simplices == {(1,)}
        assert len(a | b) == 5
        assert a.is_subcomplex_of(a | b)

    @pytest.mark.parametrize(
        "g, chi, psi",
        [
            (corpus.complete(3), 1, -1),
            (corpus.cycle(5), 0, -1),
            (corpus.octahedron(), 2, 1),
            (corpus.points(3), 3, 1),
        ],
    )
    def test_characteristics(self, g, chi, psi):
        c = whitney_complex(g)
        assert euler_characteristic(c) == chi
        assert fermi_characteristic(c) == psi

    @given(graphs(min_vertices=1), graphs(min_vertices=1))
    @settings(max_examples=40, deadline=None)
    def test_chi_is_a_valuation(self, g, h):
        # two copies glued along nothing: chi adds over disjoint unions
        shifted = h.relabel({v: v + 100 for v in h.vertices})
        union = Graph(g.vertices + shifted.vertices, g.edges | shifted.edges)
        assert graph_euler_characteristic(union) == graph_euler_characteristic(g) + graph_euler_characteristic(h)

    @given(graphs())
    @settings(max_examples=40, deadline=None)
    def test_inclusion_exclusion(self, g):
        c = whitney_complex(g)
        half = set(g.vertices[: len(g) // 2 + 1])
        a = SimplicialComplex(frozenset(x for x in c.simplices if half & set(x)))
        b = SimplicialComplex(frozenset(x for x in c.simplices if not set(x) <= half))
        chi = euler_characteristic
        assert chi(a | b) == chi(a) + chi(b) - chi(a & b)


class TestInductiveDimension:
    @pytest.mark.parametrize(
        "g, expected",
        [
            (Graph.empty(), Fraction(-1)),
            (corpus.points(4), Fraction(0)),
            (corpus.complete(3), Fraction(2)),
            (corpus.cycle(5), Fraction(1)),
            (corpus.star(3), Fraction(1)),
            (corpus.octahedron(), Fraction(2)),
        ],
    )
    def test_values(self, g, expected):
        assert inductive_dimension(g) == expected

    def test_fractional(self):
        # triangle with a pendant edge: (2 + 2 + 5/3 + 1) / 4
        g = Graph.from_edges([(0, 1), (1, 2), (0, 2), (2, 3)])
        assert inductive_dimension(g) == Fraction(5, 3)


class TestEdgeList:
    def test_parse(self):
        g = parse_edge_list("# triangle\n0 1\n1 2  # comment\n2 0\n\n7\n")
        assert g.vertices == (0, 1, 2, 7)
        assert len(g.edges) == 3

    @pytest.mark.parametrize(
        "text, line",
        [("0 1\n1 x\n", 2), ("0 1 2\n", 1), ("\n\n3 3\n", 3), ("-1 2\n", 1)],
    )
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(EdgeListError) as err:
            parse_edge_list(text)
        assert err.value.line == line
        assert str(err.value).startswith(f"line {line}:")

    @given(graphs())
    @settings(max_examples=40, deadline=None)
    def test_round_trip(self, g):
        assert parse_edge_list(format_edge_list(g)) == g
