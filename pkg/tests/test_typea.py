import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clusterminors.kernel import LaurentRing, det, identity, matmul
from clusterminors.roots import cartan, weyl_make
from clusterminors.typea import verify
from clusterminors.typea.group import (
    Letter,
    all_shuffles,
    eta_first,
    generic_point,
    psi,
    psi_inverse,
    realize,
    standard_shuffle,
    theta,
    theta_matrix,
    torus,
    x,
    xb,
)
from clusterminors.typea.minors import (
    TensorRep,
    extremal_minor,
    minor_uv,
    principal_minor,
    prop21_bindings,
    tensor_picks,
    wedge_matrix,
)

A1, A2, A3 = (cartan(t) for t in ("A1", "A2", "A3"))
T = LaurentRing(("t", "s", "u"))
t, s, u = T.gens()


def test_realize_basics():
    assert realize((), 3, T) == identity(3, T.one(), T.zero())
    assert realize((x(0, t), xb(0, s)), 2) == ((1 + t * s, t), (s, T.one()))
    with pytest.raises(IndexError):
        realize((x(2, t),), 3)


def test_letter_validation():
    with pytest.raises(ValueError):
        Letter("y", 0, t)
    with pytest.raises(ValueError):
        Letter("s", 0, t)


def test_sl2_identity():
    lhs = realize((xb(0, -t.inverse()), x(0, t), torus(0, t)), 2)
    rhs = realize((Letter("sinv", 0), xb(0, t)), 2)
    assert lhs == rhs


def test_generic_point_sl3():
    point = generic_point(A2, (0, 1))
    assert point.mat[0][2] == 0
    assert det(point.mat) == 1
    assert principal_minor(point.mat, 0) == point.ring.gen("h1")
    assert prop21_bindings(A2, (0, 1), point.mat)["x1"] == point.ring.gen("h1")


def test_generic_point_sl2():
    point = generic_point(A1, (0,), [("x", 0), ("xb", 0)], torus_at=0)
    ring = point.ring
    h, t1, tb1 = ring.gen("h1"), ring.gen("t1"), ring.gen("tb1")
    assert principal_minor(point.mat, 0) == h * (1 + t1 * tb1)


def test_malformed_shuffle():
    with pytest.raises(ValueError):
        generic_point(A2, (0, 1), [("x", 0), ("xb", 0), ("x", 1), ("xb", 1)])
    with pytest.raises(ValueError):
        generic_point(A2, (0, 1), torus_at=9)


def test_shuffle_count():
    assert len(all_shuffles((0, 1, 2))) == 20
    assert standard_shuffle((0, 1)) in all_shuffles((0, 1))


@pytest.mark.parametrize("c", list(itertools.permutations(range(3))))
def test_generic_points_have_determinant_one(c):
    for sh in all_shuffles(c)[:5]:
        assert det(generic_point(A3, c, sh).mat) == 1


def test_wedge_examples():
    g = LaurentRing(tuple(f"g{r}{c}" for r in range(1, 4) for c in range(1, 4)))
    m = tuple(tuple(g.gen(f"g{r}{c}") for c in range(1, 4)) for r in range(1, 4))
    assert wedge_matrix(m, 1) == m
    w2 = wedge_matrix(m, 2)
    # colex order of 2-subsets: {1,2}, {1,3}, {2,3}
    assert w2[1][1] == g.gen("g11") * g.gen("g33") - g.gen("g13") * g.gen("g31")
    eye = identity(4, 1, 0)
    assert wedge_matrix(eye, 2) == identity(6, 1, 0)
    with pytest.raises(ValueError):
        wedge_matrix(m, 3)


def _random_word(rng, m):
    kinds = ["x", "xb", "h", "s", "sinv"]
    word = []
    for _ in range(rng.randint(0, 5)):
        kind = rng.choice(kinds)
        i = rng.randrange(m - 1)
        if kind in ("s", "sinv"):
            word.append(Letter(kind, i))
        else:
            word.append(Letter(kind, i, rng.choice([t, s, u, 2 * t, -u]) ** rng.choice([1, -1]) if kind == "h" else rng.choice([t, s, u, t * s - 1])))
    return tuple(word)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from([(3, 1), (3, 2), (4, 2), (4, 3)]))
def test_wedge_is_functorial(seed, mk):
    m, k = mk
    rng = random.Random(seed)
    a = realize(_random_word(rng, m), m, T)
    b = realize(_random_word(rng, m), m, T)
    assert wedge_matrix(matmul(a, b), k) == matmul(wedge_matrix(a, k), wedge_matrix(b, k))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32))
def test_theta_matches_matrix_involution(seed):
    rng = random.Random(seed)
    word = _random_word(rng, 4)
    assert theta(theta(word)) == word
    assert realize(theta(word), 4, T) == theta_matrix(realize(word, 4, T))


def test_minor_uv_identity():
    point = generic_point(A2, (0, 1))
    e = weyl_make(A2, [])
    for i in range(2):
        assert minor_uv(point.mat, i, e, e) == principal_minor(point.mat, i)


def test_extremal_minor_basics():
    point = generic_point(A3, (0, 1, 2))
    for i in range(3):
        unit = tuple(int(r == i) for r in range(3))
        assert extremal_minor(point.mat, A3, unit) == principal_minor(point.mat, i)
        assert extremal_minor(point.mat, A3, unit, model="tensor") == principal_minor(point.mat, i)


def test_extremal_minor_rejects_bad_picks():
    mat = generic_point(A2, (0, 1)).mat
    with pytest.raises(ValueError):
        extremal_minor(mat, A2, (1, 0), pick=((1,),))
    with pytest.raises(ValueError):
        extremal_minor(mat, A2, (1, 0), model="nonsense")
    # a weight-correct tensor vector with zero coefficient in v_lambda
    rep = TensorRep.for_weight((1, 1))
    picks = tensor_picks(rep, weyl_make(A2, []))
    assert ((0,), (1, 0)) in picks
    with pytest.raises(ValueError):
        extremal_minor(mat, A2, (1, 1), pick=((1,), (0, 0)), model="tensor")


def test_selectors_agree_on_the_cell():
    mat = generic_point(A2, (0, 1)).mat
    for lam in verify.box_weights(2, 2):
        choices = verify.selectors(A2, lam)
        assert len({p for _, p in choices}) == 2
        values = {extremal_minor(mat, A2, lam, pick=p, model="tensor", extra=e) for e, p in choices}
        values.add(extremal_minor(mat, A2, lam))
        assert len(values) == 1


def test_psi_shapes():
    point = generic_point(A2, (0, 1))
    moved = psi(point.word, 0)
    assert moved[0].kind == "x" and moved[-1].kind == "xb"
    with pytest.raises(ValueError):
        psi(moved, 0)
    with pytest.raises(ValueError):
        psi_inverse(point.word, 0)


def test_eta_shape():
    point = generic_point(A2, (0, 1))
    small = eta_first(point.word, A2, (0, 1))
    assert {l.index for l in small} == {1}
    with pytest.raises(ValueError):
        eta_first(psi(point.word, 0), A2, (0, 1))


def _all_ok(reports):
    bad = [r for r in reports if not r.ok]
    assert not bad, bad[:3]
    assert reports


def test_intro_example():
    _all_ok(verify.check_intro_example())


@pytest.mark.parametrize("name", ["A2", "A3"])
def test_exchange_relations(name):
    cd = cartan(name)
    for c in itertools.permutations(range(cd.n)):
        _all_ok(verify.check_exchange_relations(cd, c))


@pytest.mark.parametrize("c", [(0, 1), (1, 0)])
def test_main_theorem_a2_variables(c):
    reports = verify.verify_main_theorem(A2, c, verify.cluster_variable_gvecs(A2, c))
    assert len(reports) == 5
    _all_ok(reports)


def test_psi_checks_a2():
    for c in [(0, 1), (1, 0)]:
        _all_ok(verify.check_psi_pullbacks(A2, c))
        _all_ok(verify.check_psi_inverse(A2, c))
        _all_ok(verify.check_psi_minors(A2, c))


def test_root_subgroup_invariance():
    _all_ok(verify.check_one_extra_step(A2))


def test_lift_independence():
    _all_ok(verify.check_lift_independence(A2, (0, 1), 50))


def test_corank_one_a3():
    _all_ok(verify.check_eta_pullbacks(A3, (1, 0, 2)))
    _all_ok(verify.check_corank_one_factorizations(A3, (1, 0, 2), box=1))


def test_factorization_example():
    # a sample weight with positive first coordinate on SL3
    reports = verify.check_corank_one_factorizations(A2, (0, 1))
    hits = [r for r in reports if r.instance["gvec"] == [2, 1]]
    assert {r.check for r in hits} >= {"monomial-factorization-first"}
    _all_ok(hits)


def test_shuffle_independence():
    _all_ok(verify.check_shuffle_independence(A2, (1, 0), verify.box_weights(2, 1)))


def test_failures_carry_witnesses():
    mat = generic_point(A2, (0, 1)).mat
    images = verify.CellImages(A2, (0, 1), mat)
    report = verify.run_check("demo", {}, lambda: verify.equal_or_witness(images.bindings["x1"], images.bindings["x2"]))
    assert not report.ok and report.witness["lhs"] != report.witness["rhs"]
