"""Words in the generators of SL_m and the rewriting maps between cells.

A word is a tuple of :class:`Letter`. Node i (0-based) acts on coordinates
i and i+1: ``x`` is the upper unipotent I + t E_{i,i+1}, ``xb`` the lower
unipotent I + t E_{i+1,i}, ``h`` the coroot torus element diag(.., t, 1/t, ..),
``s`` the lift of s_i sending e_i to e_{i+1} and e_{i+1} to -e_i, and
``sinv`` its inverse.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from ..kernel import LaurentPoly, LaurentRing, adjugate, det
from ..roots import CartanData, WeylElement, check_coxeter_word

KINDS = ("x", "xb", "h", "s", "sinv")


@dataclass(frozen=True)
class Letter:
    kind: str
    index: int
    param: LaurentPoly | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown letter kind {self.kind!r}")
        if (self.param is None) != (self.kind in ("s", "sinv")):
            raise ValueError(f"letter {self.kind} has the wrong parameter shape")

    def __str__(self):
        if self.param is None:
            return f"{self.kind}{self.index + 1}"
        return f"{self.kind}{self.index + 1}({self.param})"


Word = tuple[Letter, ...]


def x(i, t):
    return Letter("x", i, t)


def xb(i, t):
    return Letter("xb", i, t)


def torus(i, t):
    return Letter("h", i, t)


def word_ring(word: Sequence[Letter]) -> LaurentRing | None:
    for letter in word:
        if letter.param is not None:
            return letter.param.ring
    return None


def realize(word: Sequence[Letter], m: int, ring: LaurentRing | None = None):
    """The m x m matrix of a word, entries in ``ring``."""
    ring = ring or word_ring(word) or LaurentRing(())
    zero, one = ring.zero(), ring.one()
    cols = [[one if r == c else zero for r in range(m)] for c in range(m)]
    for letter in word:
        i = letter.index
        if not 0 <= i < m - 1:
            raise IndexError(f"letter index {i + 1} out of range for SL_{m}")
        p = letter.param
        a, b = cols[i], cols[i + 1]
        if letter.kind == "x":
            cols[i + 1] = [u + p * v if v else u for u, v in zip(b, a)]
        elif letter.kind == "xb":
            cols[i] = [u + p * v if v else u for u, v in zip(a, b)]
        elif letter.kind == "h":
            inv = p.inverse()
            cols[i] = [u * p for u in a]
            cols[i + 1] = [u * inv for u in b]
        elif letter.kind == "s":
            cols[i], cols[i + 1] = b, [-u for u in a]
        else:
            cols[i], cols[i + 1] = [-u for u in b], a
    return tuple(tuple(cols[c][r] for c in range(m)) for r in range(m))


@dataclass(frozen=True)
class GroupPoint:
    m: int
    ring: LaurentRing
    word: Word

    @cached_property
    def mat(self):
        return realize(self.word, self.m, self.ring)

    def __str__(self):
        return " ".join(map(str, self.word))


def lift(w: WeylElement | Sequence[int], inverse: bool = False) -> Word:
    """Letters for the lift of w along a reduced word, or of its inverse."""
    word = w.reduced_word if isinstance(w, WeylElement) else tuple(w)
    if inverse:
        return tuple(Letter("sinv", i) for i in reversed(word))
    return tuple(Letter("s", i) for i in word)


def check_type_a(cd: CartanData) -> int:
    n = cd.n
    for i in range(n):
        for j in range(n):
            want = 2 if i == j else (-1 if abs(i - j) == 1 else 0)
            if cd.a[i][j] != want:
                raise ValueError("matrix realizations exist only for type A in linear order")
    return n + 1


def parameter_ring(n: int, extra: Sequence[str] = ()) -> LaurentRing:
    names = [f"t{i}" for i in range(1, n + 1)]
    names += [f"tb{i}" for i in range(1, n + 1)]
    names += [f"h{i}" for i in range(1, n + 1)]
    return LaurentRing(tuple(names) + tuple(extra))


def standard_shuffle(c_word: Sequence[int], uppers_first: bool = False) -> list[tuple[str, int]]:
    lowers = [("xb", i) for i in c_word]
    uppers = [("x", i) for i in reversed(c_word)]
    return uppers + lowers if uppers_first else lowers + uppers


def all_shuffles(c_word: Sequence[int]) -> list[list[tuple[str, int]]]:
    """Every order-preserving interleaving of the lowers and the uppers."""
    lowers = [("xb", i) for i in c_word]
    uppers = [("x", i) for i in reversed(c_word)]
    out = []

    def rec(i, j, acc):
        if i == len(lowers) and j == len(uppers):
            out.append(list(acc))
            return
        if i < len(lowers):
            rec(i + 1, j, acc + [lowers[i]])
        if j < len(uppers):
            rec(i, j + 1, acc + [uppers[j]])

    rec(0, 0, [])
    return out


def generic_point(
    cd: CartanData,
    c_word: Sequence[int],
    shuffle: Sequence[tuple[str, int]] | None = None,
    torus_at: int | None = None,
    ring: LaurentRing | None = None,
) -> GroupPoint:
    """Symbolic point of the Coxeter double Bruhat cell for c.

    ``shuffle`` lists ("xb", i) / ("x", i) tokens; it must interleave the
    lowers in c order with the uppers in reverse c order. The torus factor
    h_1 ... h_n (one coroot letter per node) is inserted before position
    ``torus_at`` (default: the middle).
    """
    m = check_type_a(cd)
    c_word = check_coxeter_word(cd, c_word)
    n = cd.n
    ring = ring or parameter_ring(n)
    shuffle = list(shuffle) if shuffle is not None else standard_shuffle(c_word)
    lowers = [i for k, i in shuffle if k == "xb"]
    uppers = [i for k, i in shuffle if k == "x"]
    if len(shuffle) != 2 * n or lowers != list(c_word) or uppers != list(reversed(c_word)):
        raise ValueError(f"malformed shuffle {shuffle} for c = {c_word}")
    torus_at = n if torus_at is None else torus_at
    if not 0 <= torus_at <= 2 * n:
        raise ValueError("torus position out of range")
    letters = []
    for pos, (kind, i) in enumerate(shuffle):
        if pos == torus_at:
            letters += [torus(j, ring.gen(f"h{j + 1}")) for j in range(n)]
        name = f"t{i + 1}" if kind == "x" else f"tb{i + 1}"
        letters.append(Letter(kind, i, ring.gen(name)))
    if torus_at == 2 * n:
        letters += [torus(j, ring.gen(f"h{j + 1}")) for j in range(n)]
    return GroupPoint(m, ring, tuple(letters))


def merge_torus(word: Sequence[Letter]) -> Word:
    """Multiply adjacent torus letters of the same node and drop trivial ones."""
    out: list[Letter] = []
    for letter in word:
        if letter.kind == "h" and out and out[-1].kind == "h" and out[-1].index == letter.index:
            prev = out.pop()
            letter = Letter("h", letter.index, prev.param * letter.param)
        if letter.kind == "h" and letter.param == 1:
            continue
        out.append(letter)
    return tuple(out)


# rewriting maps


def _outer(word: Sequence[Letter], node: int, first: str, last: str):
    word = tuple(word)
    if len(word) < 2 or word[0].kind != first or word[-1].kind != last:
        raise ValueError(f"word must start with {first}{node + 1} and end with {last}{node + 1}")
    if word[0].index != node or word[-1].index != node:
        raise ValueError(f"outer letters must belong to node {node + 1}")
    middle = word[1:-1]
    if any(l.kind in ("x", "xb") and l.index == node for l in middle):
        raise ValueError(f"node {node + 1} must not occur inside the word")
    return word[0].param, middle, word[-1].param


def psi(word: Sequence[Letter], node: int) -> Word:
    """xb(a) M x(b)  ->  x(a) a^coroot M b^coroot xb(b), all at ``node``."""
    a, middle, b = _outer(word, node, "xb", "x")
    return (x(node, a), torus(node, a)) + middle + (torus(node, b), xb(node, b))


def psi_inverse(word: Sequence[Letter], node: int) -> Word:
    """x(a) M xb(b)  ->  xb(a) a^-coroot M b^-coroot x(b)."""
    a, middle, b = _outer(word, node, "x", "xb")
    return (xb(node, a), torus(node, a.inverse())) + middle + (torus(node, b.inverse()), x(node, b))


_THETA = {"x": "xb", "xb": "x", "s": "sinv", "sinv": "s"}


def theta(word: Sequence[Letter]) -> Word:
    out = []
    for l in word:
        if l.kind == "h":
            out.append(torus(l.index, l.param.inverse()))
        else:
            out.append(Letter(_THETA[l.kind], l.index, l.param))
    return tuple(out)


def theta_matrix(mat):
    """The same involution on matrices: conjugate the inverse transpose by diag(+-1)."""
    m = len(mat)
    d = det(mat)
    if d != 1:
        raise ValueError("expected a determinant-one matrix")
    adj = adjugate(mat)
    return tuple(tuple(adj[c][r] if (r + c) % 2 == 0 else -adj[c][r] for c in range(m)) for r in range(m))


def _split_standard(word, cd, c_word, uppers_first):
    """Split a word into its lowers, torus letters and uppers, checking the shape."""
    n = cd.n
    word = tuple(word)
    lowers = [l for l in word if l.kind == "xb"]
    uppers = [l for l in word if l.kind == "x"]
    tor = [l for l in word if l.kind == "h"]
    kinds = [l.kind for l in word]
    if uppers_first:
        expected = ["x"] * n + ["h"] * len(tor) + ["xb"] * n
    else:
        expected = ["xb"] * n + ["h"] * len(tor) + ["x"] * n
    ok = (
        kinds == expected
        and [l.index for l in lowers] == list(c_word)
        and [l.index for l in uppers] == list(reversed(c_word))
        and sorted(l.index for l in tor) == list(range(n))
    )
    if not ok:
        raise ValueError("word is not in the factored shape this map expects")
    return lowers, {l.index: l for l in tor}, uppers


def eta_first(word: Sequence[Letter], cd: CartanData, c_word: Sequence[int]) -> Word:
    """Drop the first node of c; rescale the upper parameters by its torus parameter."""
    c_word = check_coxeter_word(cd, c_word)
    node = c_word[0]
    lowers, tor, uppers = _split_standard(word, cd, c_word, uppers_first=False)
    h = tor[node].param
    out = [l for l in lowers if l.index != node]
    out += [tor[j] for j in sorted(tor) if j != node]
    out += [x(l.index, l.param * h ** cd.a[node][l.index]) for l in uppers if l.index != node]
    return tuple(out)


def eta_last(word: Sequence[Letter], cd: CartanData, c_word: Sequence[int]) -> Word:
    """Drop the last node of c from an uppers-first word; rescale the lowers."""
    c_word = check_coxeter_word(cd, c_word)
    node = c_word[-1]
    lowers, tor, uppers = _split_standard(word, cd, c_word, uppers_first=True)
    h = tor[node].param
    out = [l for l in uppers if l.index != node]
    out += [tor[j] for j in sorted(tor) if j != node]
    out += [xb(l.index, l.param * h ** (-cd.a[node][l.index])) for l in lowers if l.index != node]
    return tuple(out)
