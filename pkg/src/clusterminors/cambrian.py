"""Sorting words, c-sortable elements and the cones of the doubled Cambrian fan."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .kernel import solve_rational
from .roots import (
    CartanData,
    Root,
    Weight,
    WeylElement,
    check_coxeter_word,
    is_positive_root,
    nu_c,
    weyl_elements,
    weyl_make,
)

PLUS, MINUS = "+", "-"


class FanViolation(RuntimeError):
    """Cambrian cone data contradicting the simplicial-fan property."""

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class SortingWord:
    c_word: tuple[int, ...]
    letters: tuple[tuple[int, int], ...]  # (copy of c, simple reflection)

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(s for _, s in self.letters)

    @property
    def copies(self) -> int:
        return self.letters[-1][0] + 1 if self.letters else 0

    @property
    def skips(self) -> tuple[frozenset[int], ...]:
        taken = [set() for _ in range(self.copies)]
        for k, s in self.letters:
            taken[k].add(s)
        return tuple(frozenset(set(self.c_word) - t) for t in taken)

    @property
    def sortable(self) -> bool:
        sk = self.skips
        return all(a <= b for a, b in zip(sk, sk[1:]))


def c_sorting_word(cd: CartanData, c_word: Sequence[int], w: WeylElement) -> SortingWord:
    """Leftmost reduced subword of c c c ... spelling ``w``."""
    c_word = check_coxeter_word(cd, c_word)
    rest = w
    letters = []
    copy = 0
    while rest.length:
        for s in c_word:
            if rest.is_left_descent(s):
                letters.append((copy, s))
                rest = rest.left_mul(s)
        copy += 1
    return SortingWord(c_word, tuple(letters))


def is_c_sortable(cd: CartanData, c_word: Sequence[int], w: WeylElement) -> bool:
    return c_sorting_word(cd, c_word, w).sortable


def cl_c(cd: CartanData, c_word: Sequence[int], w: WeylElement) -> tuple[Root, ...]:
    """For each i, minus the image of alpha_i under the sorting-word prefix
    ending at the last occurrence of s_i (the identity if s_i never occurs)."""
    sw = c_sorting_word(cd, c_word, w)
    if not sw.sortable:
        raise ValueError(f"{w} is not sortable for c = {c_word}")
    word = sw.word
    out = []
    for i in range(cd.n):
        last = max((k for k, s in enumerate(word) if s == i), default=-1)
        prefix = weyl_make(cd, word[: last + 1])
        simple = tuple(int(j == i) for j in range(cd.n))
        out.append(tuple(-x for x in prefix.apply_root(simple)))
    return tuple(out)


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v) if g else tuple(v)


@dataclass(frozen=True)
class CambrianCone:
    generators: tuple[Weight, ...]
    source: WeylElement
    sign: str
    c_word: tuple[int, ...]

    @property
    def rays(self) -> frozenset:
        return frozenset(primitive(g) for g in self.generators)

    def coordinates(self, lam: Weight) -> tuple[Fraction, ...] | None:
        """Coordinates of ``lam`` in the generators, if it lies in the cone."""
        cols = list(zip(*self.generators))
        coords = solve_rational(cols, lam)
        if coords is None or any(x < 0 for x in coords):
            return None
        return coords

    def describe(self) -> dict:
        return {
            "sortable_word": [i + 1 for i in self.source.reduced_word],
            "sign": self.sign,
            "generators": [list(g) for g in self.generators],
        }


def cambrian_cone(cd: CartanData, c_word: Sequence[int], w: WeylElement, sign: str = PLUS) -> CambrianCone:
    c_word = check_coxeter_word(cd, c_word)
    if sign == PLUS:
        gens = tuple(nu_c(cd, c_word, beta) for beta in cl_c(cd, c_word, w))
    elif sign == MINUS:
        inv = c_word[::-1]
        gens = tuple(tuple(-x for x in nu_c(cd, inv, beta)) for beta in cl_c(cd, inv, w))
    else:
        raise ValueError(f"sign must be '+' or '-', not {sign!r}")
    if solve_rational(list(zip(*gens)), [0] * cd.n) is None:
        raise FanViolation("dependent cone generators", {"w": w.reduced_word, "sign": sign, "gens": gens})
    return CambrianCone(gens, w, sign, c_word)


def sortable_elements(cd: CartanData, c_word: Sequence[int], max_length: int) -> list[WeylElement]:
    """c-sortable elements of length <= max_length, in breadth-first order."""
    c_word = check_coxeter_word(cd, c_word)
    return [w for w in weyl_elements(cd, max_length) if is_c_sortable(cd, c_word, w)]


def doubled_fan(cd: CartanData, c_word: Sequence[int], max_length: int) -> list[CambrianCone]:
    """Maximal cones of F_c and of -F_{c^-1} from sortables up to the bound."""
    c_word = check_coxeter_word(cd, c_word)
    elements = weyl_elements(cd, max_length)
    cones = []
    for w in elements:
        if is_c_sortable(cd, c_word, w):
            cones.append(cambrian_cone(cd, c_word, w, PLUS))
        if is_c_sortable(cd, c_word[::-1], w):
            cones.append(cambrian_cone(cd, c_word, w, MINUS))
    return cones


def fan_membership(cd: CartanData, c_word: Sequence[int], lam: Weight, length_bound: int):
    """(cone, coordinates) for a minimal-length sortable whose cone holds lam, else None."""
    for cone in doubled_fan(cd, c_word, length_bound):
        coords = cone.coordinates(lam)
        if coords is not None:
            return cone, coords
    return None


def check_cone_reflection(cd: CartanData, c_word: Sequence[int], w: WeylElement) -> tuple[bool, dict]:
    """Compare s_1 Cone_c(w) with Cone_{s_1 c s_1}(s_1 w), for s_1 initial in w."""
    c_word = check_coxeter_word(cd, c_word)
    first = c_word[0]
    if not is_c_sortable(cd, c_word, w) or not w.is_left_descent(first):
        raise ValueError("needs a sortable element with the first letter of c initial")
    from .roots import reflect

    lhs = frozenset(primitive(reflect(cd, first, g)) for g in cambrian_cone(cd, c_word, w).generators)
    rotated = c_word[1:] + (first,)
    rhs = cambrian_cone(cd, rotated, w.left_mul(first)).rays
    return lhs == rhs, {"lhs": sorted(lhs), "rhs": sorted(rhs)}


def cones_meet_properly(first: CambrianCone, second: CambrianCone) -> tuple[bool, dict | None]:
    """Whether two full-dimensional simplicial cones meet in a common face.

    The intersection is a common face iff every point of it has zero
    coordinates on the rays of ``first`` that are not rays of ``second``.
    Each such coordinate is tested by exact vertex enumeration of
    {a >= 0, M a >= 0, a_j >= 1} with M the change of basis.
    """
    g1 = [primitive(g) for g in first.generators]
    g2 = [primitive(g) for g in second.generators]
    n = len(g1)
    shared = set(g1) & set(g2)
    cols2 = list(zip(*g2))
    # column j of M = coordinates of g1[j] in the basis g2
    m_cols = [solve_rational(cols2, g) for g in g1]
    m_rows = [[m_cols[j][r] for j in range(n)] for r in range(n)]
    for j in range(n):
        if g1[j] in shared:
            continue
        rows = [[Fraction(int(k == c)) for c in range(n)] for k in range(n)] + m_rows
        rhs = [Fraction(0)] * (2 * n)
        rows.append([Fraction(int(c == j)) for c in range(n)])
        rhs.append(Fraction(1))
        for active in itertools.combinations(range(len(rows)), n):
            sol = solve_rational([rows[k] for k in active], [rhs[k] for k in active])
            if sol is None:
                continue
            if all(sum(x * y for x, y in zip(rows[k], sol)) >= rhs[k] for k in range(len(rows))):
                point = tuple(sum(sol[c] * g1[c][r] for c in range(n)) for r in range(n))
                return False, {"point": [str(x) for x in point]}
    return True, None


def ray_cone_key(gvecs: Sequence[Weight]) -> frozenset:
    return frozenset(primitive(g) for g in gvecs)


def cl_slots_ok(roots: Sequence[Root]) -> bool:
    """Each slot holds a negative simple root or a positive root."""
    n = len(roots)
    for i, beta in enumerate(roots):
        neg_simple = tuple(-int(j == i) for j in range(n))
        if beta != neg_simple and not is_positive_root(beta):
            return False
    return True
