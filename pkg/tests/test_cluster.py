import itertools
import random

import pytest

from clusterminors.cluster import (
    cluster_ring,
    degree,
    exchange_matrix,
    explorer,
    find_cluster_monomial,
    g_vector,
    initial_seed,
    is_laurent_with_monomial_coefficients,
    mutate,
    mutate_path,
    opposite_seed_check,
    to_th_coords,
)
from clusterminors.roots import cartan

A2, A3, B2, AFF = (cartan(t) for t in ("A2", "A3", "B2", "A1~"))
R2 = cluster_ring(2)
x1, x2, z1, z2, zb1, zb2 = R2.gens()


def test_exchange_matrix_examples():
    assert exchange_matrix(A2, (0, 1)) == ((0, 1), (-1, 0))
    assert exchange_matrix(AFF, (0, 1)) == ((0, 2), (-2, 0))
    for name in ("A3", "B2", "G2", "A2~"):
        cd = cartan(name)
        for c in itertools.permutations(range(cd.n)):
            b = exchange_matrix(cd, c)
            assert all(b[i][i] == 0 for i in range(cd.n))
            # skew-symmetrizable by the symmetrizer
            assert all(cd.d[i] * b[i][j] == -cd.d[j] * b[j][i] for i in range(cd.n) for j in range(cd.n))


def test_initial_seed():
    seed = initial_seed(A2, (0, 1))
    assert seed.vars == (x1, x2)
    assert seed.gvecs == ((1, 0), (0, 1))
    assert seed.ex_matrix == ((0, 1), (-1, 0), (1, 0), (0, 1), (1, 0), (0, 1))


def test_first_mutation():
    seed = mutate(initial_seed(A2, (0, 1)), 0)
    assert seed.vars[0] == (x2 + z1 * zb1) * x1.inverse()
    assert seed.gvecs[0] == (-1, 1) == g_vector(seed, 0)


def test_mutation_index_checked():
    with pytest.raises(IndexError):
        mutate(initial_seed(A2, (0, 1)), 2)


def test_degree_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        degree(x1 + x2, A2, (0, 1))
    assert degree(x1**2 * x2, A2, (0, 1)) == (2, 1)


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "A1~"])
def test_mutation_is_involutive(name):
    cd = cartan(name)
    rng = random.Random(7)
    for _ in range(125):
        c = tuple(rng.sample(range(cd.n), cd.n))
        seed = mutate_path(initial_seed(cd, c), [rng.randrange(cd.n) for _ in range(rng.randint(0, 4))])
        k = rng.randrange(cd.n)
        back = mutate(mutate(seed, k), k)
        assert back.vars == seed.vars and back.ex_matrix == seed.ex_matrix and back.gvecs == seed.gvecs


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "A1~"])
def test_laurent_phenomenon(name):
    cd = cartan(name)
    ex = explorer(cd, tuple(range(cd.n)))
    for var in ex.cluster_variables(8 if cd.n == 2 else 6):
        assert all(lo >= -50 for lo, _ in var.exponent_bounds())
        assert is_laurent_with_monomial_coefficients(var, cd.n)
        z_part = [exps[cd.n :] for exps, _ in var.items()]
        assert all(e >= 0 for exps in z_part for e in exps)


def test_path_keeps_laurent():
    seed = mutate_path(initial_seed(A2, (0, 1)), [1, 0])
    assert all(is_laurent_with_monomial_coefficients(v, 2) for v in seed.vars)


@pytest.mark.parametrize("name, count", [("A2", 5), ("A3", 14), ("B2", 6), ("G2", 8)])
def test_seed_counts(name, count):
    cd = cartan(name)
    for c in itertools.permutations(range(cd.n)):
        ex = explorer(cd, c)
        ex.expand_to(20)
        assert ex.closed and len(ex.seeds) == count


def test_find_examples():
    mono = find_cluster_monomial(A2, (0, 1), (2, 0))
    assert mono.value == x1**2 and mono.seed.path == ()
    mono = find_cluster_monomial(A2, (0, 1), (1, -1))
    assert sorted(g for g, _ in mono.factor_gvecs()) == [(0, -1), (1, 0)]
    assert find_cluster_monomial(AFF, (0, 1), (-1, 1), 12) is None


@pytest.mark.parametrize("name", ["A2", "A3", "A1~"])
def test_opposite_seed(name):
    cd = cartan(name)
    for c in itertools.permutations(range(cd.n)):
        assert opposite_seed_check(cd, c)


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "G2"])
def test_sign_coherence(name):
    cd = cartan(name)
    n = cd.n
    for c in itertools.permutations(range(n)):
        first, last = c[0], c[-1]
        for g in set(explorer(cd, c).cluster_variables(20).values()):
            if g[first] > 0:
                assert g == tuple(int(i == first) for i in range(n))
            if g[last] < 0:
                assert g == tuple(-int(i == last) for i in range(n))


def test_to_th_coords_constant():
    assert to_th_coords(R2.one(), {}) == 1
