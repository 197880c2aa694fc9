import pytest

from greencomplex import corpus
from greencomplex.arithmetic import is_additive_prime
from greencomplex.complex import euler_characteristic, f_vector, fermi_characteristic, whitney_complex
from greencomplex.spheres import sphere_spectrum

DNA = {
    "adenine": ((15, 16), -1, 1, [-2, -1, 0]),
    "guanine": ((16, 17), -1, -1, [-2, -1, 0]),
    "cytosine": ((13, 13), 0, -1, [-2, -1, 0]),
    "thymine": ((15, 15), 0, -1, [-3, -2, 0]),
}


@pytest.mark.parametrize("name", sorted(DNA))
def test_dna_bases(name):
    g = corpus.dna_base(name)
    c = whitney_complex(g)
    f, chi, psi, sigma = DNA[name]
    assert f_vector(c) == f
    assert euler_characteristic(c) == chi
    assert fermi_characteristic(c) == psi
    assert sphere_spectrum(c).vertex_spectrum == sigma
    # on a 1-dimensional graph the index is 1 - degree
    assert sorted({1 - g.degree(v) for v in g.vertices}) == sigma
    assert is_additive_prime(g)


def test_thymine_refined_spectrum_has_an_extra_value():
    assert sphere_spectrum(whitney_complex(corpus.dna_base("thymine"))).spectrum == [-3, -2, -1, 0]


def test_projective_plane():
    c = whitney_complex(corpus.projective_plane())
    assert f_vector(c) == (15, 42, 28)
    assert euler_characteristic(c) == 1
    assert fermi_characteristic(c) == 1


def test_named_shapes():
    assert len(corpus.octahedron().edges) == 12
    assert len(corpus.sixteen_cell().edges) == 24
    assert len(corpus.linear(2)) == 3
    assert len(corpus.star(4)) == 5
    with pytest.raises(ValueError):
        corpus.cycle(2)


def test_random_graphs_are_reproducible():
    a = corpus.random_graphs(20, seed=9)
    assert a == corpus.random_graphs(20, seed=9)
    assert a != corpus.random_graphs(20, seed=10)
    assert all(1 <= len(g) <= 8 for g in a)
