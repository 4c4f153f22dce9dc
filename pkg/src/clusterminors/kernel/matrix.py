"""Small exact matrices as nested tuples.

Entries may be ints, Fractions or LaurentPolys; nothing here cares which, as
long as they support ring arithmetic.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = tuple[tuple, ...]


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    m = tuple(tuple(r) for r in rows)
    if not m or not m[0]:
        raise ValueError("matrix dimensions must be positive")
    if any(len(r) != len(m[0]) for r in m):
        raise ValueError("ragged matrix")
    return m


def identity(m: int, one=1, zero=0) -> Matrix:
    return tuple(tuple(one if i == j else zero for j in range(m)) for i in range(m))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise ValueError("shape mismatch in product")
    cols = list(zip(*b))
    out = []
    for row in a:
        new = []
        for col in cols:
            acc = 0
            for x, y in zip(row, col):
                if x and y:
                    acc = x * y + acc
            new.append(acc)
        out.append(tuple(new))
    return tuple(out)


def matvec(a: Matrix, v: Sequence) -> tuple:
    return tuple(sum((x * y for x, y in zip(row, v)), 0) for row in a)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def matrix_minor(mat: Matrix, rows: Sequence[int], cols: Sequence[int]):
    """Determinant of the submatrix on ``rows`` x ``cols`` (0-based indices)."""
    rows, cols = list(rows), list(cols)
    if len(rows) != len(cols) or not rows:
        raise ValueError("minor needs equally many rows and columns, at least one")
    nr, nc = len(mat), len(mat[0])
    if any(not 0 <= r < nr for r in rows) or any(not 0 <= c < nc for c in cols):
        raise IndexError("minor index out of range")
    k = len(rows)
    memo: dict[tuple[int, int], object] = {}

    # Laplace expansion along successive rows, memoized on the set of
    # columns still available
    def expand(r: int, avail: int):
        if r == k:
            return 1
        key = (r, avail)
        if key in memo:
            return memo[key]
        acc = 0
        sign = 1
        row = mat[rows[r]]
        for j in range(k):
            bit = 1 << j
            if avail & bit:
                entry = row[cols[j]]
                if entry:
                    sub = expand(r + 1, avail & ~bit)
                    if sub:
                        term = entry * sub
                        acc = acc + term if sign > 0 else acc - term
                sign = -sign
        memo[key] = acc
        return acc

    return expand(0, (1 << k) - 1)


def det(mat: Matrix):
    n = len(mat)
    return matrix_minor(mat, range(n), range(n))


def adjugate(mat: Matrix) -> Matrix:
    n = len(mat)
    if n == 1:
        return ((1,),)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            rows = [r for r in range(n) if r != j]
            cols = [c for c in range(n) if c != i]
            cof = matrix_minor(mat, rows, cols)
            row.append(cof if (i + j) % 2 == 0 else -cof)
        out.append(tuple(row))
    return tuple(out)


def solve_rational(a: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...] | None:
    """Unique solution of a square system over Q, or None if singular."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(row[n] for row in aug)


def rank_rational(a: Sequence[Sequence]) -> int:
    rows = [[Fraction(x) for x in r] for r in a]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank
