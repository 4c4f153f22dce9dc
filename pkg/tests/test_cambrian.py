import itertools

import pytest

from clusterminors.cambrian import (
    MINUS,
    PLUS,
    c_sorting_word,
    cambrian_cone,
    check_cone_reflection,
    cl_c,
    cl_slots_ok,
    cones_meet_properly,
    doubled_fan,
    fan_membership,
    is_c_sortable,
    primitive,
    sortable_elements,
)
from clusterminors.checks import check_fan_axiom, check_gvector_fan, check_sortable_counts
from clusterminors.roots import cartan, weyl_elements, weyl_make

A2, A3, B2, G2, AFF = (cartan(t) for t in ("A2", "A3", "B2", "G2", "A1~"))
C12 = (0, 1)
W0 = weyl_make(A2, [0, 1, 0])


def test_sorting_word_of_c():
    sw = c_sorting_word(A3, (2, 0, 1), weyl_make(A3, [2, 0, 1]))
    assert sw.letters == ((0, 2), (0, 0), (0, 1))


def test_sorting_word_skips_then_uses():
    sw = c_sorting_word(A2, C12, weyl_make(A2, [1, 0]))
    assert sw.letters == ((0, 1), (1, 0))
    assert sw.skips == (frozenset({0}), frozenset({1}))
    assert not sw.sortable


def test_sorting_word_of_longest():
    sw = c_sorting_word(A2, C12, W0)
    assert sw.letters == ((0, 0), (0, 1), (1, 0))
    assert sw.skips == (frozenset(), frozenset({1}))


def test_sortability_examples():
    assert is_c_sortable(A2, C12, weyl_make(A2, []))
    assert not is_c_sortable(A2, C12, weyl_make(A2, [1, 0]))
    assert is_c_sortable(A2, C12, W0)


@pytest.mark.parametrize("name, count", [("A2", 5), ("A3", 14), ("B2", 6), ("G2", 8)])
def test_sortable_counts(name, count):
    cd = cartan(name)
    for c in itertools.permutations(range(cd.n)):
        assert len(sortable_elements(cd, c, 20)) == count


def test_cl_examples():
    assert cl_c(A3, (0, 1, 2), weyl_make(A3, [])) == ((-1, 0, 0), (0, -1, 0), (0, 0, -1))
    assert set(cl_c(A2, C12, weyl_make(A2, [0]))) == {(1, 0), (0, -1)}
    assert set(cl_c(A2, C12, W0)) == {(0, 1), (1, 1)}
    with pytest.raises(ValueError):
        cl_c(A2, C12, weyl_make(A2, [1, 0]))


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "G2", "A1~", "A2~"])
def test_cl_slots(name):
    cd = cartan(name)
    for c in itertools.permutations(range(cd.n)):
        for w in sortable_elements(cd, c, 6):
            assert cl_slots_ok(cl_c(cd, c, w))


def test_cl_ignores_commuting_swaps():
    # s1 and s3 commute in A3
    for w in weyl_elements(A3, 6):
        a, b = (0, 2, 1), (2, 0, 1)
        assert is_c_sortable(A3, a, w) == is_c_sortable(A3, b, w)
        if is_c_sortable(A3, a, w):
            assert cl_c(A3, a, w) == cl_c(A3, b, w)


def test_cone_examples():
    assert set(cambrian_cone(A3, (0, 1, 2), weyl_make(A3, [])).generators) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    assert set(cambrian_cone(A2, C12, W0).generators) == {(0, -1), (-1, 0)}
    minus = cambrian_cone(A2, C12, weyl_make(A2, []), MINUS)
    assert set(minus.generators) == {(-1, 0), (0, -1)}


def test_membership_examples():
    cone, coords = fan_membership(A2, C12, (1, 0), 5)
    assert cone.source.length == 0 and cone.sign == PLUS and list(coords) == [1, 0]
    # the minimal-length witness for -w1-w2 is the negative orthant
    cone, coords = fan_membership(A2, C12, (-1, -1), 5)
    assert cone.source.length == 0 and cone.sign == MINUS
    # it also lies in the cone of the longest element, with coordinates (1, 1)
    assert list(cambrian_cone(A2, C12, W0).coordinates((-1, -1))) == [1, 1]
    assert fan_membership(AFF, C12, (-1, 1), 12) is None


def test_cone_reflection_examples():
    assert check_cone_reflection(A2, C12, weyl_make(A2, [0]))[0]
    assert check_cone_reflection(A2, C12, W0)[0]
    with pytest.raises(ValueError):
        check_cone_reflection(A2, C12, weyl_make(A2, [1]))


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "G2", "A1~"])
def test_cone_reflection_exhaustive(name):
    cd = cartan(name)
    for c in itertools.permutations(range(cd.n)):
        for w in sortable_elements(cd, c, 8):
            if w.is_left_descent(c[0]):
                ok, witness = check_cone_reflection(cd, c, w)
                assert ok, witness


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A1~"])
def test_fan_axiom(name):
    cd = cartan(name)
    for c in itertools.permutations(range(cd.n)):
        assert check_fan_axiom(cd, c, 8).ok


def test_fan_axiom_rank_three():
    assert check_fan_axiom(A3, (0, 1, 2), 6).ok
    assert check_fan_axiom(cartan("A2~"), (0, 1, 2), 3).ok


def test_overlapping_cones_are_detected():
    first = cambrian_cone(A2, C12, weyl_make(A2, []))
    inner = type(first)(((1, 1), (0, 1)), first.source, first.sign, first.c_word)
    ok, witness = cones_meet_properly(first, inner)
    assert not ok and witness["point"]
    assert cones_meet_properly(first, first)[0]
    skew = type(first)(((2, -1), (-1, 2)), first.source, first.sign, first.c_word)
    assert not cones_meet_properly(first, skew)[0]


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "G2"])
def test_fan_is_gvector_fan(name):
    cd = cartan(name)
    for c in itertools.permutations(range(cd.n)):
        assert check_sortable_counts(cd, c).ok
        assert check_gvector_fan(cd, c).ok


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "G2"])
def test_sign_dichotomy(name):
    cd = cartan(name)
    for c in itertools.permutations(range(cd.n)):
        first = c[0]
        for w in sortable_elements(cd, c, 20):
            gens = cambrian_cone(cd, c, w).generators
            if w.is_left_descent(first):
                assert all(g[first] <= 0 for g in gens)
            else:
                assert first not in w.reduced_word
                assert all(g[first] >= 0 for g in gens)


def test_primitive():
    assert primitive((4, -6)) == (2, -3)
    assert primitive((0, 0)) == (0, 0)
