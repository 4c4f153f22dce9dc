"""Cartan data, weight and root lattices, Weyl group elements and the map nu_c.

Indices are 0-based throughout the library; only the CLI and report text use
1-based labels. Weights are integer tuples in the fundamental-weight basis,
roots are integer tuples in the simple-root basis.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Weight = tuple[int, ...]
Root = tuple[int, ...]


@dataclass(frozen=True)
class CartanData:
    """A symmetrizable generalized Cartan matrix.

    ``a[i][j]`` is the pairing of the simple root j with the simple coroot i,
    so column j of ``a`` is the simple root j written in fundamental weights.
    """

    a: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]
    name: str = field(default="custom", compare=False)

    def __post_init__(self):
        a = tuple(tuple(int(x) for x in row) for row in self.a)
        d = tuple(int(x) for x in self.d)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "d", d)
        n = len(a)
        if n == 0 or any(len(row) != n for row in a):
            raise ValueError("Cartan matrix must be square and nonempty")
        if len(d) != n or any(x <= 0 for x in d):
            raise ValueError("symmetrizer must be n positive integers")
        for i in range(n):
            if a[i][i] != 2:
                raise ValueError(f"diagonal entry {i} is not 2")
            for j in range(n):
                if i == j:
                    continue
                if a[i][j] > 0:
                    raise ValueError(f"positive off-diagonal entry at ({i}, {j})")
                if (a[i][j] == 0) != (a[j][i] == 0):
                    raise ValueError(f"zero pattern not symmetric at ({i}, {j})")
                if d[i] * a[i][j] != d[j] * a[j][i]:
                    raise ValueError(f"symmetrizer fails at ({i}, {j})")

    @property
    def n(self) -> int:
        return len(self.a)

    def check_index(self, i: int) -> None:
        if not 0 <= i < self.n:
            raise IndexError(f"simple reflection index {i} out of range for rank {self.n}")

    def simple_root_weight(self, i: int) -> Weight:
        return tuple(self.a[r][i] for r in range(self.n))

    def root_to_weight(self, beta: Root) -> Weight:
        return tuple(sum(self.a[r][j] * beta[j] for j in range(self.n)) for r in range(self.n))

    def root_form(self, beta: Root, gamma: Root) -> int:
        """The W-invariant form on the root lattice, (alpha_i, alpha_j) = d_i a_ij."""
        n = self.n
        return sum(beta[i] * self.d[i] * self.a[i][j] * gamma[j] for i in range(n) for j in range(n))

    def restrict(self, keep: Sequence[int]) -> "CartanData":
        """Cartan data of the sub-diagram on ``keep`` (relabelled 0..len-1)."""
        keep = list(keep)
        a = tuple(tuple(self.a[i][j] for j in keep) for i in keep)
        return CartanData(a, tuple(self.d[i] for i in keep), f"{self.name}[{','.join(map(str, keep))}]")

    @classmethod
    def from_json(cls, source: str | dict) -> "CartanData":
        if isinstance(source, str):
            with open(source) as fh:
                source = json.load(fh)
        cd = cls(tuple(map(tuple, source["matrix"])), tuple(source["symmetrizer"]), source.get("name", "custom"))
        if source.get("rank", cd.n) != cd.n:
            raise ValueError("declared rank does not match the matrix")
        return cd


def _type_a(n: int) -> CartanData:
    a = [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]
    return CartanData(tuple(map(tuple, a)), (1,) * n, f"A{n}")


REGISTRY: dict[str, CartanData] = {
    "A1": _type_a(1),
    "A2": _type_a(2),
    "A3": _type_a(3),
    "A4": _type_a(4),
    "B2": CartanData(((2, -1), (-2, 2)), (2, 1), "B2"),
    "G2": CartanData(((2, -1), (-3, 2)), (3, 1), "G2"),
    "A1~": CartanData(((2, -2), (-2, 2)), (1, 1), "A1~"),
    "A2~": CartanData(((2, -1, -1), (-1, 2, -1), (-1, -1, 2)), (1, 1, 1), "A2~"),
}
_ALIASES = {"A1(1)": "A1~", "A1^(1)": "A1~", "A2(1)": "A2~", "A2^(1)": "A2~"}
FINITE_TYPES = {"A1", "A2", "A3", "A4", "B2", "G2"}


def cartan(name: str) -> CartanData:
    key = _ALIASES.get(name, name)
    if key not in REGISTRY:
        raise KeyError(f"unknown Cartan type {name!r}; known: {', '.join(sorted(REGISTRY))}")
    return REGISTRY[key]


def check_coxeter_word(cd: CartanData, c_word: Sequence[int]) -> tuple[int, ...]:
    c_word = tuple(c_word)
    if sorted(c_word) != list(range(cd.n)):
        raise ValueError(f"{c_word} is not a permutation of the {cd.n} simple reflections")
    return c_word


# lattice actions


def reflect(cd: CartanData, i: int, lam: Weight) -> Weight:
    cd.check_index(i)
    li = lam[i]
    if not li:
        return tuple(lam)
    return tuple(x - li * cd.a[r][i] for r, x in enumerate(lam))


def reflect_root(cd: CartanData, i: int, beta: Root) -> Root:
    cd.check_index(i)
    coef = sum(cd.a[i][j] * beta[j] for j in range(cd.n))
    out = list(beta)
    out[i] -= coef
    return tuple(out)


def _reflection_matrix(cd: CartanData, i: int) -> tuple[tuple[int, ...], ...]:
    n = cd.n
    return tuple(
        tuple((1 if r == c else 0) - (cd.a[r][i] if c == i else 0) for c in range(n)) for r in range(n)
    )


def _matmul(x, y):
    return tuple(tuple(sum(x[r][k] * y[k][c] for k in range(len(y))) for c in range(len(y[0]))) for r in range(len(x)))


def _apply(mat, v):
    return tuple(sum(m * x for m, x in zip(row, v)) for row in mat)


class WeylElement:
    """An element of W, identified by its matrix on the weight lattice."""

    def __init__(self, cd: CartanData, action):
        self.cd = cd
        self.action = tuple(tuple(r) for r in action)

    @classmethod
    def identity(cls, cd: CartanData) -> "WeylElement":
        n = cd.n
        return cls(cd, tuple(tuple(int(r == c) for c in range(n)) for r in range(n)))

    @classmethod
    def simple(cls, cd: CartanData, i: int) -> "WeylElement":
        cd.check_index(i)
        return cls(cd, _reflection_matrix(cd, i))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(self.cd, _matmul(self.action, other.action))

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.cd == other.cd and self.action == other.action

    def __hash__(self):
        return hash(self.action)

    def __repr__(self):
        word = "".join(f"s{i + 1}" for i in self.reduced_word) or "e"
        return f"WeylElement({word})"

    def left_mul(self, i: int) -> "WeylElement":
        """s_i * self, computed by a row operation."""
        a = self.cd.a
        act = self.action
        row_i = act[i]
        return WeylElement(
            self.cd,
            tuple(tuple(x - a[r][i] * y for x, y in zip(act[r], row_i)) if a[r][i] else act[r] for r in range(len(act))),
        )

    def right_mul(self, i: int) -> "WeylElement":
        return self * WeylElement.simple(self.cd, i)

    def apply(self, lam: Weight) -> Weight:
        return _apply(self.action, lam)

    def is_left_descent(self, i: int) -> bool:
        # s_i is a left descent iff w^{-1} alpha_i < 0 iff <w rho, alpha_i^vee> < 0
        return sum(self.action[i]) < 0

    def left_descents(self) -> list[int]:
        return [i for i in range(self.cd.n) if sum(self.action[i]) < 0]

    @cached_property
    def reduced_word(self) -> tuple[int, ...]:
        word = []
        w = self
        while True:
            desc = w.left_descents()
            if not desc:
                break
            word.append(desc[0])
            w = w.left_mul(desc[0])
        return tuple(word)

    @property
    def length(self) -> int:
        return len(self.reduced_word)

    def inverse(self) -> "WeylElement":
        return weyl_make(self.cd, self.reduced_word[::-1])

    def is_right_descent(self, i: int) -> bool:
        image = self.apply_root(tuple(int(j == i) for j in range(self.cd.n)))
        return not is_positive_root(image)

    def apply_root(self, beta: Root) -> Root:
        for i in reversed(self.reduced_word):
            beta = reflect_root(self.cd, i, beta)
        return beta


def weyl_make(cd: CartanData, word: Iterable[int]) -> WeylElement:
    w = WeylElement.identity(cd)
    for i in reversed(list(word)):
        cd.check_index(i)
        w = w.left_mul(i)
    return w


def weyl_elements(cd: CartanData, max_length: int) -> list[WeylElement]:
    """All elements of length at most ``max_length``, sorted by length (BFS)."""
    ident = WeylElement.identity(cd)
    seen = {ident}
    layer = [ident]
    out = [ident]
    for _ in range(max_length):
        nxt = []
        for w in layer:
            for i in range(cd.n):
                if w.is_right_descent(i):
                    continue
                v = w.right_mul(i)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        if not nxt:
            break
        out.extend(nxt)
        layer = nxt
    return out


def real_roots(cd: CartanData, max_height: int) -> set[Root]:
    """Real roots with |height| <= max_height, as the W-orbit of the simple roots."""
    n = cd.n
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple) | {tuple(-x for x in r) for r in simple}
    todo = list(found)
    while todo:
        beta = todo.pop()
        for i in range(n):
            gamma = reflect_root(cd, i, beta)
            if abs(sum(gamma)) <= max_height and gamma not in found:
                found.add(gamma)
                todo.append(gamma)
    return found


def is_positive_root(beta: Root) -> bool:
    return all(x >= 0 for x in beta) and any(beta)


def dominant_conjugate(cd: CartanData, lam: Weight, max_steps: int = 10_000) -> tuple[Weight, WeylElement]:
    """Dominant mu and w with w mu = lam (terminates in finite type)."""
    word = []
    mu = tuple(lam)
    for _ in range(max_steps):
        neg = next((i for i, x in enumerate(mu) if x < 0), None)
        if neg is None:
            # lam = s_{word[0]} ... s_{word[-1]} mu
            return mu, weyl_make(cd, word)
        mu = reflect(cd, neg, mu)
        word.append(neg)
    raise ValueError(f"{lam} has no dominant conjugate within {max_steps} steps")


def nu_c(cd: CartanData, c_word: Sequence[int], beta: Root) -> Weight:
    """The piecewise-linear map sending a root to a weight, for Coxeter word c."""
    c_word = check_coxeter_word(cd, c_word)
    pos = {s: k for k, s in enumerate(c_word)}
    out = []
    for i in range(cd.n):
        acc = beta[i]
        for j in range(cd.n):
            if pos[j] < pos[i] and beta[j] > 0:
                acc += cd.a[i][j] * beta[j]
        out.append(-acc)
    return tuple(out)
