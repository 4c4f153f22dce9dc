"""Elementary symmetric polynomials and reduction to the e-basis."""
from __future__ import annotations

import itertools
import math

from .laurent import LaurentPoly, LaurentRing


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero whenever n < 0, k < 0 or k > n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def elementary(ring: LaurentRing, k: int, names=None) -> LaurentPoly:
    """e_k in the given variables (all ring variables by default)."""
    names = ring.names if names is None else tuple(names)
    if k == 0:
        return ring.one()
    acc = ring.zero()
    for subset in itertools.combinations(names, k):
        acc = acc + ring.monomial({nm: 1 for nm in subset})
    return acc


def is_symmetric(p: LaurentPoly) -> bool:
    names = p.ring.names
    for i in range(len(names) - 1):
        swap = {names[i]: p.ring.gen(names[i + 1]), names[i + 1]: p.ring.gen(names[i])}
        if p.substitute(swap) != p:
            return False
    return True


def e_ring(n: int) -> LaurentRing:
    return LaurentRing(tuple(f"e{k}" for k in range(1, n + 1)))


def e_basis_reduce(p: LaurentPoly, target: LaurentRing | None = None) -> LaurentPoly:
    """Write a symmetric polynomial in the elementary symmetric polynomials.

    The result lives in the ring e1..en (n = number of variables of ``p``),
    or in ``target`` if given, which must contain those names.
    """
    ring = p.ring
    n = ring.nvars
    target = target or e_ring(n)
    if p and any(lo < 0 for lo, _ in p.exponent_bounds()):
        raise ValueError("e-basis reduction needs a polynomial, not a Laurent polynomial")
    if not is_symmetric(p):
        raise ValueError("input is not symmetric")
    es = [elementary(ring, k) for k in range(n + 1)]
    cache: dict[tuple[int, ...], LaurentPoly] = {}

    def e_product(mults):
        if mults not in cache:
            acc = ring.one()
            for k, m in enumerate(mults, start=1):
                if m:
                    acc = acc * es[k] ** m
            cache[mults] = acc
        return cache[mults]

    out = target.zero()
    rem = p
    while rem:
        # packed keys order lexicographically with the last variable most
        # significant, so the leading exponents decrease from a_n down to a_1
        top = max(rem.terms)
        exps = ring.unpack(top)[::-1]
        coeff = rem.terms[top]
        mults = tuple(exps[k] - (exps[k + 1] if k + 1 < n else 0) for k in range(n))
        if any(m < 0 for m in mults):
            raise ValueError("input is not symmetric")
        rem = rem - e_product(mults) * coeff
        out = out + target.monomial({f"e{k}": m for k, m in enumerate(mults, start=1) if m}, coeff)
    return out
