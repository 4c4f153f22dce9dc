"""Exact multivariate Laurent polynomials with rational coefficients.

Every polynomial lives in a :class:`LaurentRing`, an ordered tuple of variable
names. Monomials are stored as packed integers (one fixed-width biased field per
variable) so that multiplying monomials is a single integer addition, and
coefficients are ``gmpy2.mpq`` rationals.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from gmpy2 import mpq

_BITS = 20
_OFF = 1 << (_BITS - 1)
_MASK = (1 << _BITS) - 1

#: largest absolute exponent a single variable may carry
MAX_EXPONENT = _OFF - 1


class RingMismatchError(ValueError):
    """Operands belong to different ambient rings."""


class InexactDivisionError(ArithmeticError):
    """A division in the Laurent ring did not come out exact."""

    def __init__(self, dividend, divisor, remainder):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        super().__init__(f"inexact division; nonzero remainder {remainder}")


class NotInvertibleError(ArithmeticError):
    """Tried to invert something that is not a Laurent monomial."""


def _to_mpq(c) -> mpq:
    if isinstance(c, mpq):
        return c
    if isinstance(c, int):
        return mpq(c)
    if isinstance(c, Fraction):
        return mpq(c.numerator, c.denominator)
    if isinstance(c, str):
        return mpq(Fraction(c))
    raise TypeError(f"not an exact rational: {c!r}")


def _is_scalar(c) -> bool:
    return isinstance(c, (int, Fraction, mpq))


class LaurentRing:
    """The ring Q[v1^{+-1}, ..., vk^{+-1}] on a fixed tuple of names.

    Rings are interned: two rings on the same names are the same object.
    """

    _interned: dict = {}

    def __new__(cls, names: Iterable[str]):
        names = tuple(names)
        ring = cls._interned.get(names)
        if ring is None:
            if len(set(names)) != len(names):
                raise ValueError(f"repeated variable names in {names}")
            for name in names:
                if not re.fullmatch(r"[A-Za-z_]\w*", name):
                    raise ValueError(f"bad variable name {name!r}")
            ring = super().__new__(cls)
            ring.names = names
            ring.nvars = len(names)
            ring.index = {nm: i for i, nm in enumerate(names)}
            ring.bias = sum(_OFF << (_BITS * i) for i in range(len(names)))
            cls._interned[names] = ring
        return ring

    def __reduce__(self):
        return (LaurentRing, (self.names,))

    def __repr__(self):
        return f"LaurentRing({', '.join(self.names)})"

    # packed monomial keys

    def pack(self, exps: Sequence[int]) -> int:
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        key = 0
        for i, e in enumerate(exps):
            if not -MAX_EXPONENT <= e <= MAX_EXPONENT:
                raise OverflowError(f"exponent {e} out of supported range")
            key |= (e + _OFF) << (_BITS * i)
        return key

    def unpack(self, key: int) -> tuple[int, ...]:
        return tuple(((key >> (_BITS * i)) & _MASK) - _OFF for i in range(self.nvars))

    # constructors

    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, {})

    def one(self) -> "LaurentPoly":
        return self.const(1)

    def const(self, c) -> "LaurentPoly":
        c = _to_mpq(c)
        return LaurentPoly(self, {self.bias: c} if c else {})

    def monomial(self, exps: Mapping[str, int] | Sequence[int], coeff=1) -> "LaurentPoly":
        if isinstance(exps, Mapping):
            vec = [0] * self.nvars
            for name, e in exps.items():
                if name not in self.index:
                    raise RingMismatchError(f"{name} is not a variable of {self}")
                vec[self.index[name]] += e
            exps = vec
        c = _to_mpq(coeff)
        return LaurentPoly(self, {self.pack(exps): c} if c else {})

    def gen(self, name: str) -> "LaurentPoly":
        return self.monomial({name: 1})

    __getitem__ = gen

    def gens(self) -> tuple["LaurentPoly", ...]:
        return tuple(self.gen(nm) for nm in self.names)

    def from_terms(self, terms: Iterable[tuple[Sequence[int], object]]) -> "LaurentPoly":
        acc: dict[int, mpq] = {}
        for exps, c in terms:
            k = self.pack(exps)
            v = acc.get(k, 0) + _to_mpq(c)
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)
        return LaurentPoly(self, acc)

    def coerce(self, value) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            if value.ring is not self:
                raise RingMismatchError(f"{value.ring} is not {self}")
            return value
        return self.const(value)

    def parse(self, text: str) -> "LaurentPoly":
        return parse(text, self)


class LaurentPoly:
    """Immutable Laurent polynomial. Supports +, -, *, ** and exact ``/``."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: LaurentRing, terms: dict[int, mpq]):
        # terms must already be free of zero coefficients
        self.ring = ring
        self.terms = terms
        self._hash = None

    def __reduce__(self):
        return (LaurentPoly, (self.ring, self.terms))

    # inspection

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring.bias in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return _frac(self.terms.get(self.ring.bias, mpq(0)))

    def items(self) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        """(exponent vector, coefficient) pairs in canonical order."""
        for k in self._sorted_keys():
            yield self.ring.unpack(k), _frac(self.terms[k])

    def coefficient(self, exps: Mapping[str, int] | Sequence[int]) -> Fraction:
        key = self.ring.monomial(exps).terms
        (k,) = key
        return _frac(self.terms.get(k, mpq(0)))

    def exponent_bounds(self) -> list[tuple[int, int]]:
        """Per-variable (min, max) exponents; the zero polynomial has none."""
        if not self.terms:
            raise ValueError("zero polynomial has no exponent bounds")
        vecs = [self.ring.unpack(k) for k in self.terms]
        return [(min(col), max(col)) for col in zip(*vecs)] if vecs[0] else []

    def variables(self) -> set[str]:
        used = set()
        for exps, _ in self.items():
            used.update(nm for nm, e in zip(self.ring.names, exps) if e)
        return used

    def _sorted_keys(self):
        unpack = self.ring.unpack

        def order(k):
            e = unpack(k)
            return (sum(e), e)

        return sorted(self.terms, key=order, reverse=True)

    # arithmetic

    def _other(self, other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            if other.ring is not self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if _is_scalar(other):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        acc = dict(big)
        for k, c in small.items():
            v = acc.get(k)
            if v is None:
                acc[k] = c
            else:
                v += c
                if v:
                    acc[k] = v
                else:
                    del acc[k]
        return LaurentPoly(self.ring, acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            c = _to_mpq(other)
            if not c:
                return self.ring.zero()
            return LaurentPoly(self.ring, {k: v * c for k, v in self.terms.items()})
        other = self._other(other)
        if other is None:
            return NotImplemented
        bias = self.ring.bias
        acc: dict[int, mpq] = {}
        get = acc.get
        for k1, c1 in self.terms.items():
            kb = k1 - bias
            for k2, c2 in other.terms.items():
                k = k2 + kb
                acc[k] = get(k, 0) + c1 * c2
        return LaurentPoly(self.ring, {k: v for k, v in acc.items() if v})

    __rmul__ = __mul__

    def inverse(self) -> "LaurentPoly":
        if len(self.terms) != 1:
            raise NotInvertibleError(f"{self} is not a unit of the Laurent ring")
        ((k, c),) = self.terms.items()
        return LaurentPoly(self.ring, {2 * self.ring.bias - k: 1 / c})

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        if len(self.terms) == 1:
            ((k, c),) = self.terms.items()
            exps = [x * e for x in self.ring.unpack(k)]
            return LaurentPoly(self.ring, {self.ring.pack(exps): c**e})
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other):
        if _is_scalar(other):
            c = _to_mpq(other)
            if not c:
                raise ZeroDivisionError("division by zero")
            return self * (1 / c)
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self.exact_div(other)

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other.exact_div(self)

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient in the Laurent ring; raises InexactDivisionError otherwise."""
        other = self._other(other)
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if len(other.terms) == 1:
            return self * other.inverse()
        if not self.terms:
            return self
        ring = self.ring
        bias = ring.bias
        # a quotient term must fit inside this exponent box, per variable
        pb, qb = self.exponent_bounds(), other.exponent_bounds()
        box = [(p0 - q0, p1 - q1) for (p0, p1), (q0, q1) in zip(pb, qb)]
        lead = max(other.terms)
        lead_c = other.terms[lead]
        divisor = list(other.terms.items())
        rem = dict(self.terms)
        quot: dict[int, mpq] = {}
        while rem:
            top = max(rem)
            key = top - lead + bias
            exps = ring.unpack(key)
            if any(not lo <= e <= hi for e, (lo, hi) in zip(exps, box)):
                raise InexactDivisionError(self, other, LaurentPoly(ring, rem))
            c = rem[top] / lead_c
            quot[key] = c
            shift = key - bias
            for k, v in divisor:
                kk = k + shift
                nv = rem.get(kk, 0) - c * v
                if nv:
                    rem[kk] = nv
                else:
                    rem.pop(kk, None)
        return LaurentPoly(ring, quot)

    def divides(self, other: "LaurentPoly") -> bool:
        try:
            other.exact_div(self)
        except InexactDivisionError:
            return False
        return True

    # comparison

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.ring is other.ring and self.terms == other.terms
        if _is_scalar(other):
            return self.terms == self.ring.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, frozenset(self.terms.items())))
        return self._hash

    # ring changes and evaluation

    def substitute(self, bindings: Mapping[str, object], ring: LaurentRing | None = None) -> "LaurentPoly":
        """Ring homomorphism sending each variable to its binding.

        Unbound variables map to the same-named variable of the target ring.
        A variable with negative exponent needs a unit image, or the overall
        denominator has to divide the result exactly.
        """
        target = ring
        if target is None:
            for v in bindings.values():
                if isinstance(v, LaurentPoly):
                    target = v.ring
                    break
            else:
                target = self.ring
        images = []
        for name in self.ring.names:
            if name in bindings:
                images.append(target.coerce(bindings[name]))
            elif name in target.index:
                images.append(target.gen(name))
            else:
                images.append(None)
        if not self.terms:
            return target.zero()
        unpack = self.ring.unpack
        vecs = [(unpack(k), c) for k, c in self.terms.items()]
        for i, img in enumerate(images):
            if img is None and any(e[i] for e, _ in vecs):
                raise RingMismatchError(f"no binding for {self.ring.names[i]}")
        if all(img is None or img.is_monomial() for img in images):
            return _substitute_units(vecs, images, target)
        low = [min(0, min(e[i] for e, _ in vecs)) for i in range(self.ring.nvars)]
        powers: dict[tuple[int, int], LaurentPoly] = {}

        def power(i, k):
            if (i, k) not in powers:
                powers[(i, k)] = images[i] ** k
            return powers[(i, k)]

        numer = target.zero()
        for exps, c in vecs:
            term = target.const(c)
            for i, e in enumerate(exps):
                if e - low[i]:
                    term = term * power(i, e - low[i])
            numer = numer + term
        denom = target.one()
        for i, lo in enumerate(low):
            if lo:
                denom = denom * power(i, -lo)
        if denom.is_monomial():
            return numer * denom.inverse()
        try:
            return numer.exact_div(denom)
        except InexactDivisionError as err:
            raise NotInvertibleError(f"substitution leaves a denominator: {err}") from err

    def embed(self, ring: LaurentRing) -> "LaurentPoly":
        """Same polynomial, viewed in a ring that has all of its variables."""
        if ring is self.ring:
            return self
        return self.substitute({}, ring)

    def evaluate(self, values: Mapping[str, object]) -> Fraction:
        total = Fraction(0)
        for exps, c in self.items():
            term = c
            for name, e in zip(self.ring.names, exps):
                if e:
                    term *= Fraction(values[name]) ** e
            total += term
        return total

    # text

    def to_string(self) -> str:
        if not self.terms:
            return "0"
        out = []
        names = self.ring.names
        for exps, c in self.items():
            parts = [f"{c.numerator}/{c.denominator}"]
            parts += [f"{nm}^{e}" for nm, e in zip(names, exps) if e]
            out.append("*".join(parts))
        return " + ".join(out)

    __str__ = to_string

    def __repr__(self):
        return f"LaurentPoly({self.to_string()!r})"


def _frac(c: mpq) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def _substitute_units(vecs, images, target: LaurentRing) -> LaurentPoly:
    bias = target.bias
    shifts, coeffs = [], []
    for img in images:
        if img is None:
            shifts.append(0)
            coeffs.append(mpq(1))
        else:
            ((k, c),) = img.terms.items()
            shifts.append(k - bias)
            coeffs.append(c)
    acc: dict[int, mpq] = {}
    for exps, c in vecs:
        key = bias
        for e, s, ic in zip(exps, shifts, coeffs):
            if e:
                key += e * s
                if ic != 1:
                    c = c * ic**e
        acc[key] = acc.get(key, 0) + c
    for k in acc:
        # guard against a field overflowing into its neighbour
        target.pack(target.unpack(k))
    return LaurentPoly(target, {k: v for k, v in acc.items() if v})


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_]\w*)(?:\^(-?\d+))?|([+\-*]))")


def parse(text: str, ring: LaurentRing) -> LaurentPoly:
    """Read the canonical serialization (and looser forms like ``x^2 - 1``)."""
    text = text.strip()
    if text == "0":
        return ring.zero()
    acc = ring.zero()
    sign, coeff, exps, seen = 1, mpq(1), {}, False
    pos = 0

    def flush():
        nonlocal acc
        if not seen:
            raise ValueError(f"empty term in {text!r}")
        acc = acc + ring.monomial(exps, sign * coeff)

    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text[pos:]!r}")
        pos = m.end()
        num, name, exp, op = m.groups()
        if num is not None:
            coeff *= _to_mpq(num)
            seen = True
        elif name is not None:
            exps[name] = exps.get(name, 0) + (int(exp) if exp else 1)
            seen = True
        elif op in "+-":
            if seen:
                flush()
                sign, coeff, exps, seen = 1, mpq(1), {}, False
            if op == "-":
                sign = -sign
    flush()
    return acc
