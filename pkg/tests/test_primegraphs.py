import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from greencomplex.primegraphs import (
    build_panel,
    euler_characteristic_streamed,
    fredholm_signature,
    mertens,
    mertens_euler,
    mobius_sieve,
    prime_green_check,
    sphere_at,
    squarefree_factorizations,
)


def naive_mobius(k: int) -> int:
    sign, p = 1, 2
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            sign = -sign
        p += 1
    return -sign if k > 1 else sign


def test_mobius_against_trial_division():
    mu = mobius_sieve(500)
    assert mu[1:] == [naive_mobius(k) for k in range(1, 501)]


def test_factorizations():
    f = squarefree_factorizations(30)
    assert f[30] == (2, 3, 5)
    assert 12 not in f and 2 in f
    assert len(f) == 18


@pytest.mark.parametrize("n, m", [(1, 1), (2, 0), (10, -1), (100, 1), (1000, 2)])
def test_mertens_values(n, m):
    assert mertens(n) == m


def test_mertens_euler_identity():
    for n in range(2, 1001):
        chi, rhs = mertens_euler(n)
        assert chi == rhs


@given(st.integers(2, 400))
@settings(max_examples=30, deadline=None)
def test_streamed_values_match_panel(n):
    from greencomplex.complex import euler_characteristic, fermi_characteristic

    p = build_panel(n)
    assert euler_characteristic(p.complex) == euler_characteristic_streamed(n)
    assert fermi_characteristic(p.complex) == fredholm_signature(n)


def test_panel_100():
    p = build_panel(100)
    assert len(p.squarefree) == 60
    assert p.g_n.has_edge(2, 10) and not p.g_n.has_edge(6, 10)
    assert p.h_n.has_edge(6, 10)


def test_panel_limits():
    with pytest.raises(ValueError):
        build_panel(1)
    with pytest.raises(ValueError):
        build_panel(501)


def test_green_check_up_to_60():
    for n in range(2, 61):
        assert prime_green_check(build_panel(n)).ok, n


def test_green_check_cap():
    with pytest.raises(ValueError):
        prime_green_check(build_panel(100), matrix_cap=10)


def test_sphere_at_two():
    s = sphere_at(build_panel(100), 2)
    assert s.vertices == (6, 10, 14, 22, 26, 30, 34, 38, 42, 46, 58, 62, 66, 70, 74, 78, 82, 86, 94)
    assert s.edges == 10
    assert s.betti == (10, 1)
    assert s.chi == 9
    assert s.index == s.green == -8


def test_prime_indices_at_100():
    p = build_panel(100)
    idx = {r.vertex: r.green for r in prime_green_check(p).rows}
    assert idx[2] == -8 and idx[3] == -5 and idx[5] == -4
    assert {idx[q] for q in (53, 59, 61, 67, 71, 73, 79, 83, 89, 97)} == {1}
    assert idx[47] == 0


def test_sphere_at_rejects_non_vertex():
    with pytest.raises(KeyError):
        sphere_at(build_panel(20), 12)


def test_streamed_sum_is_fast():
    import time

    start = time.perf_counter()
    chi, rhs = mertens_euler(1000)
    assert chi == rhs == -1
    assert time.perf_counter() - start < 5
