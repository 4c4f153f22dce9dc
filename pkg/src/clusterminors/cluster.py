"""Seeds with doubled principal coefficients, mutation and g-vectors.

The ambient ring has variables x1..xn (initial cluster), z1..zn and zb1..zbn
(the two frozen families). The grading puts x_i in degree omega_i, z_j in
degree -sum_i b_ij omega_i and zb_j in degree 0.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, Sequence

from .kernel import LaurentPoly, LaurentRing
from .roots import CartanData, Weight, check_coxeter_word


def cluster_ring(n: int) -> LaurentRing:
    names = [f"x{i}" for i in range(1, n + 1)]
    names += [f"z{i}" for i in range(1, n + 1)]
    names += [f"zb{i}" for i in range(1, n + 1)]
    return LaurentRing(names)


def exchange_matrix(cd: CartanData, c_word: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """B_c: a_ij where j comes before i in c, -a_ij where i comes before j."""
    c_word = check_coxeter_word(cd, c_word)
    pos = {s: k for k, s in enumerate(c_word)}
    n = cd.n
    return tuple(
        tuple(0 if i == j else (cd.a[i][j] if pos[j] < pos[i] else -cd.a[i][j]) for j in range(n))
        for i in range(n)
    )


@dataclass(frozen=True)
class Seed:
    cd: CartanData
    c_word: tuple[int, ...]
    ex_matrix: tuple[tuple[int, ...], ...]  # 3n x n
    vars: tuple[LaurentPoly, ...]
    gvecs: tuple[Weight, ...]
    path: tuple[int, ...] = field(default=(), compare=False)

    @property
    def n(self) -> int:
        return self.cd.n

    @property
    def key(self) -> frozenset:
        return frozenset(self.vars)

    @property
    def exchange_part(self):
        return self.ex_matrix[: self.n]


def initial_seed(cd: CartanData, c_word: Sequence[int]) -> Seed:
    c_word = check_coxeter_word(cd, c_word)
    n = cd.n
    b = exchange_matrix(cd, c_word)
    eye = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    ring = cluster_ring(n)
    xs = tuple(ring.gen(f"x{i + 1}") for i in range(n))
    gvecs = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    return Seed(cd, c_word, b + eye + eye, xs, gvecs, ())


@lru_cache(maxsize=None)
def frozen_degrees(cd: CartanData, c_word: tuple[int, ...]) -> dict[str, Weight]:
    b = exchange_matrix(cd, c_word)
    n = cd.n
    out = {}
    for j in range(n):
        out[f"z{j + 1}"] = tuple(-b[i][j] for i in range(n))
        out[f"zb{j + 1}"] = (0,) * n
    for i in range(n):
        out[f"x{i + 1}"] = tuple(int(i == r) for r in range(n))
    return out


def degree(p: LaurentPoly, cd: CartanData, c_word: Sequence[int]) -> Weight:
    """Common degree of all terms; raises if p is not homogeneous."""
    degs = frozen_degrees(cd, tuple(c_word))
    names = p.ring.names
    found = None
    for exps, _ in p.items():
        d = [0] * cd.n
        for nm, e in zip(names, exps):
            if e:
                for r, x in enumerate(degs[nm]):
                    d[r] += e * x
        d = tuple(d)
        if found is None:
            found = d
        elif d != found:
            raise ValueError(f"inhomogeneous: degrees {found} and {d} in {p}")
    if found is None:
        raise ValueError("the zero polynomial has no degree")
    return found


def g_vector(seed: Seed, i: int) -> Weight:
    return degree(seed.vars[i], seed.cd, seed.c_word)


def mutate(seed: Seed, k: int) -> Seed:
    n = seed.n
    if not 0 <= k < n:
        raise IndexError(f"mutation direction {k} out of range")
    b = seed.ex_matrix
    ring = seed.vars[0].ring
    # the frozen generators for rows n..3n-1
    labels = [None] * n + [ring.gen(f"z{j + 1}") for j in range(n)] + [ring.gen(f"zb{j + 1}") for j in range(n)]
    pos = ring.one()
    neg = ring.one()
    for r in range(3 * n):
        e = b[r][k]
        if not e:
            continue
        base = seed.vars[r] if r < n else labels[r]
        if e > 0:
            pos = pos * base**e
        else:
            neg = neg * base ** (-e)
    new_var = (pos + neg).exact_div(seed.vars[k])
    new_b = []
    for r in range(3 * n):
        row = []
        for c in range(n):
            if r == k or c == k:
                row.append(-b[r][c])
            else:
                brk, bkc = b[r][k], b[k][c]
                row.append(b[r][c] + (abs(brk) * bkc + brk * abs(bkc)) // 2)
        new_b.append(tuple(row))
    new_vars = seed.vars[:k] + (new_var,) + seed.vars[k + 1 :]
    new_g = degree(new_var, seed.cd, seed.c_word)
    gvecs = seed.gvecs[:k] + (new_g,) + seed.gvecs[k + 1 :]
    return Seed(seed.cd, seed.c_word, tuple(new_b), new_vars, gvecs, seed.path + (k,))


def mutate_path(seed: Seed, path: Sequence[int]) -> Seed:
    for k in path:
        seed = mutate(seed, k)
    return seed


@dataclass(frozen=True)
class ClusterMonomial:
    gvec: Weight
    value: LaurentPoly
    factorization: tuple[tuple[LaurentPoly, int], ...]
    seed: Seed = field(compare=False)

    def factor_gvecs(self) -> list[tuple[Weight, int]]:
        out = []
        for var, e in self.factorization:
            out.append((self.seed.gvecs[self.seed.vars.index(var)], e))
        return out


class SeedExplorer:
    """Breadth-first exploration of the exchange graph, memoized by cluster."""

    def __init__(self, cd: CartanData, c_word: Sequence[int]):
        self.cd = cd
        self.c_word = check_coxeter_word(cd, c_word)
        start = initial_seed(cd, self.c_word)
        self.seeds: dict[frozenset, Seed] = {start.key: start}
        self.order: list[Seed] = [start]
        self.depth = 0
        self._frontier: deque[Seed] = deque([start])
        self.closed = False

    def expand_to(self, depth: int) -> None:
        while self.depth < depth and not self.closed:
            nxt = deque()
            for seed in self._frontier:
                for k in range(self.cd.n):
                    if seed.path and seed.path[-1] == k:
                        continue
                    new = mutate(seed, k)
                    if new.key not in self.seeds:
                        self.seeds[new.key] = new
                        self.order.append(new)
                        nxt.append(new)
            self._frontier = nxt
            self.depth += 1
            if not nxt:
                self.closed = True

    def cluster_variables(self, depth: int) -> dict[LaurentPoly, Weight]:
        self.expand_to(depth)
        out = {}
        for seed in self.order:
            for v, g in zip(seed.vars, seed.gvecs):
                out.setdefault(v, g)
        return out

    def find(self, lam: Weight, depth: int) -> ClusterMonomial | None:
        from .kernel import solve_rational

        self.expand_to(depth)
        lam = tuple(lam)
        for seed in self.order:
            if len(seed.path) > depth:
                break
            coords = solve_rational(list(zip(*seed.gvecs)), lam)
            if coords is None or any(x < 0 or x.denominator != 1 for x in coords):
                continue
            ring = seed.vars[0].ring
            value = ring.one()
            factors = []
            for v, e in zip(seed.vars, coords):
                e = int(e)
                if e:
                    value = value * v**e
                    factors.append((v, e))
            return ClusterMonomial(lam, value, tuple(factors), seed)
        return None


_EXPLORERS: dict[tuple, SeedExplorer] = {}


def explorer(cd: CartanData, c_word: Sequence[int]) -> SeedExplorer:
    key = (cd, tuple(c_word))
    if key not in _EXPLORERS:
        _EXPLORERS[key] = SeedExplorer(cd, c_word)
    return _EXPLORERS[key]


def find_cluster_monomial(cd: CartanData, c_word: Sequence[int], lam: Weight, depth_bound: int = 8):
    return explorer(cd, c_word).find(lam, depth_bound)


def opposite_seed(cd: CartanData, c_word: Sequence[int]) -> Seed:
    """Mutate the initial seed along c read backwards."""
    c_word = check_coxeter_word(cd, c_word)
    return mutate_path(initial_seed(cd, c_word), c_word[::-1])


def opposite_seed_check(cd: CartanData, c_word: Sequence[int]) -> bool:
    seed = opposite_seed(cd, c_word)
    expected = {tuple(-int(i == r) for r in range(cd.n)) for i in range(cd.n)}
    return set(seed.gvecs) == expected


def is_laurent_with_monomial_coefficients(p: LaurentPoly, n: int) -> bool:
    """Grouping terms by their x-exponents, each group is a single z-monomial."""
    groups: dict[tuple, int] = {}
    for exps, _ in p.items():
        groups[exps[:n]] = groups.get(exps[:n], 0) + 1
    return all(v == 1 for v in groups.values())


def to_th_coords(p: LaurentPoly, bindings: Mapping[str, LaurentPoly]) -> LaurentPoly:
    """Push a polynomial in x, z, zb to the factorization coordinates."""
    return p.substitute(bindings)
