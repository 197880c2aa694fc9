import numpy as np
import pytest
from hypothesis import given, settings

from conftest import graphs
from greencomplex import corpus
from greencomplex.arithmetic import zykov_join, zykov_product
from greencomplex.complex import Graph
from greencomplex.spectral import (
    join_eigen_checks,
    join_lambda2,
    laplacian,
    stated_join_lambda2,
    vertex_laplacian_spectrum,
)

nonempty = graphs(min_vertices=1, max_vertices=6)


def test_laplacian_rows_sum_to_zero():
    m = laplacian(corpus.windmill())
    assert np.allclose(m.sum(axis=1), 0)


def test_complete_graph_spectrum():
    s = vertex_laplacian_spectrum(corpus.complete(4))
    assert s.eigenvalues == pytest.approx([0, 4, 4, 4], abs=1e-9)
    assert s.multiplicity_of(4) == 3
    assert s.lambda2 == pytest.approx(4)


def test_disconnected_lambda2_is_zero():
    s = vertex_laplacian_spectrum(corpus.points(3))
    assert s.lambda2 == 0 and s.zero_multiplicity == 3
    assert s.smallest_nonzero is None


def test_tiny_graphs():
    assert vertex_laplacian_spectrum(Graph.empty()).eigenvalues == ()
    assert vertex_laplacian_spectrum(corpus.complete(1)).lambda2 is None


def test_size_limit():
    with pytest.raises(ValueError):
        vertex_laplacian_spectrum(corpus.points(201))


def test_octahedron_max_eigenvalue():
    assert vertex_laplacian_spectrum(zykov_product(corpus.complete(3), corpus.points(2))).maximum == pytest.approx(6)


def test_sixteen_cell():
    s = vertex_laplacian_spectrum(corpus.sixteen_cell())
    assert s.maximum == pytest.approx(8)
    assert s.multiplicity_of(8) >= 3


@given(nonempty, nonempty)
@settings(max_examples=60, deadline=None)
def test_join_identities(g, h):
    r = join_eigen_checks(g, h)
    assert r.order_eigenvalue
    assert r.lambda2_ok
    assert all(r.multiple_ok.values())
    assert all(r.product_max_ok.values())


def test_join_lambda2_worked_example():
    # S4 + P2: the exact value is 3
    g, h = corpus.star(4), corpus.points(2)
    assert vertex_laplacian_spectrum(zykov_join(g, h)).lambda2 == pytest.approx(3)
    assert join_lambda2(g, h) == pytest.approx(3)


def test_literal_lambda2_formula_counterexample():
    # path on 5 vertices joined with K6: min |V| + min lambda2 uses 5, the true shift is 6
    g, h = corpus.linear(4), corpus.complete(6)
    assert stated_join_lambda2(g, h) != pytest.approx(join_lambda2(g, h))
    r = join_eigen_checks(g, h)
    assert r.lambda2_ok and r.stated_ok is False
