"""
Exact arithmetic in R = Q[q, 1/q] and cyclotomic factorization of weights.

A Laurent polynomial is stored densely: a lowest exponent ``low`` and a tuple
of :class:`fractions.Fraction` coefficients whose first and last entries are
nonzero. The zero polynomial has an empty coefficient tuple.

>>> cyclotomic(6)
LaurentPoly('q^2 - q + 1')
>>> q_integer(4) == cyclotomic(2) * cyclotomic(4)
True
"""
from __future__ import annotations

import dataclasses
import functools
from fractions import Fraction
from typing import Iterable, Mapping


class InexactDivision(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


class NonCyclotomicFactor(ValueError):
    """Raised when trial division by cyclotomics leaves a non-unit residual."""


def _trim(low: int, coeffs: list[Fraction]) -> tuple[int, tuple[Fraction, ...]]:
    start = 0
    while start < len(coeffs) and coeffs[start] == 0:
        start += 1
    end = len(coeffs)
    while end > start and coeffs[end - 1] == 0:
        end -= 1
    if start == end:
        return 0, ()
    return low + start, tuple(coeffs[start:end])


class LaurentPoly:
    """An element of Q[q, 1/q]. Immutable and hashable."""

    __slots__ = ("low", "_c", "_hash")

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        if not coeffs:
            self.low, self._c = 0, ()
        else:
            lo = min(coeffs)
            hi = max(coeffs)
            dense = [Fraction(0)] * (hi - lo + 1)
            for e, c in coeffs.items():
                dense[e - lo] += Fraction(c)
            self.low, self._c = _trim(lo, dense)
        self._hash = None

    @classmethod
    def from_dense(cls, low: int, coeffs: Iterable) -> LaurentPoly:
        """Build from ``coeffs[i]`` = coefficient of ``q^(low + i)``."""
        obj = cls.__new__(cls)
        obj.low, obj._c = _trim(low, [Fraction(c) for c in coeffs])
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c) -> LaurentPoly:
        return cls.from_dense(0, [c])

    @classmethod
    def monomial(cls, exponent: int, c=1) -> LaurentPoly:
        return cls.from_dense(exponent, [c])

    @property
    def coeffs(self) -> dict[int, Fraction]:
        """Exponent to nonzero coefficient."""
        return {self.low + i: c for i, c in enumerate(self._c) if c != 0}

    @property
    def dense(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def high(self) -> int:
        """Largest exponent with nonzero coefficient (undefined for zero)."""
        return self.low + len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def is_unit(self) -> bool:
        """Units of R are the nonzero monomials."""
        return len(self._c) == 1

    def span(self) -> int:
        """high - low; the degree after clearing the q-power. -1 for zero."""
        return len(self._c) - 1

    def leading(self) -> Fraction:
        return self._c[-1]

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other._c:
            return self
        if not self._c:
            return other
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        out = [Fraction(0)] * (hi - lo + 1)
        for i, c in enumerate(self._c):
            out[self.low - lo + i] += c
        for i, c in enumerate(other._c):
            out[other.low - lo + i] += c
        return LaurentPoly.from_dense(lo, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly.from_dense(self.low, [-c for c in self._c])

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self._c or not other._c:
            return ZERO
        a, b = self._c, other._c
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return LaurentPoly.from_dense(self.low + other.low, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_unit():
                raise InexactDivision("negative power of a non-unit")
            return LaurentPoly.monomial(k * self.low, 1 / self._c[0] ** (-k))
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        """
        Euclidean division after aligning lowest terms.

        Both operands are shifted so their lowest exponent is 0; the quotient
        absorbs the q-power difference. The remainder has smaller span than
        ``other``.
        """
        if not other._c:
            raise ZeroDivisionError("division by zero polynomial")
        if not self._c:
            return ZERO, ZERO
        shift = self.low - other.low
        num = list(self._c)
        den = other._c
        lead = den[-1]
        dn = len(den) - 1
        quot = [Fraction(0)] * max(len(num) - dn, 1)
        for i in range(len(num) - 1, dn - 1, -1):
            c = num[i]
            if c == 0:
                continue
            f = c / lead
            quot[i - dn] = f
            for j in range(dn + 1):
                num[i - dn + j] -= f * den[j]
        q = LaurentPoly.from_dense(shift, quot)
        r = LaurentPoly.from_dense(self.low, num[:dn] if dn else [])
        return q, r

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        q, r = self.divmod(other)
        if not r.is_zero():
            raise InexactDivision(f"{self} is not divisible by {other}")
        return q

    def divides(self, other: LaurentPoly) -> bool:
        return other.divmod(self)[1].is_zero()

    def monic(self) -> LaurentPoly:
        """Associate with leading coefficient 1 and lowest exponent 0."""
        if not self._c:
            return self
        lead = self._c[-1]
        return LaurentPoly.from_dense(0, [c / lead for c in self._c])

    def evaluate(self, x):
        return sum(c * x ** (self.low + i) for i, c in enumerate(self._c) if c != 0)

    # comparison / display

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.low == other.low and self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.low, self._c))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    def __str__(self):
        return render(self)


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.constant(x)
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
Q = LaurentPoly.monomial(1)


def render_rational(c: Fraction) -> str:
    """Locale-independent ``p/q`` rendering (``p`` alone for integers)."""
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def render(p: LaurentPoly) -> str:
    """
    Render as ``a*q^k + ...`` with descending exponents.

    >>> render(LaurentPoly({2: 1, 1: -1, 0: 1}))
    'q^2 - q + 1'
    >>> render(LaurentPoly({-1: 3}))
    '3*q^-1'
    """
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p.coeffs, reverse=True):
        c = p.coeffs[e]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = render_rational(a)
        else:
            mono = "q" if e == 1 else f"q^{e}"
            body = mono if a == 1 else f"{render_rational(a)}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


@functools.lru_cache(maxsize=None)
def cyclotomic(d: int) -> LaurentPoly:
    """phi_d, obtained by dividing q^d - 1 by phi_e for the proper divisors e of d."""
    if d < 1:
        raise ValueError("d must be >= 1")
    p = LaurentPoly({d: 1, 0: -1})
    for e in range(1, d):
        if d % e == 0:
            p = p.exact_div(cyclotomic(e))
    return p


@functools.lru_cache(maxsize=None)
def totient(d: int) -> int:
    """Euler's phi; the degree of the d-th cyclotomic polynomial."""
    out, m, p = d, d, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            out -= out // p
        p += 1
    if m > 1:
        out -= out // m
    return out


@functools.lru_cache(maxsize=None)
def q_integer(k: int) -> LaurentPoly:
    """[k]_q = 1 + q + ... + q^(k-1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return LaurentPoly.from_dense(0, [1] * k)


def q_factorial(k: int) -> LaurentPoly:
    out = ONE
    for i in range(1, k + 1):
        out = out * q_integer(i)
    return out


@dataclasses.dataclass(frozen=True)
class CyclotomicProfile:
    """``unit * prod_d phi_d^exponents[d]`` with ``unit = coefficient * q^shift``."""
    exponents: dict[int, int]
    coefficient: Fraction = Fraction(1)
    shift: int = 0

    @property
    def unit(self) -> LaurentPoly:
        return LaurentPoly.monomial(self.shift, self.coefficient)

    def to_poly(self) -> LaurentPoly:
        out = self.unit
        for d, e in sorted(self.exponents.items()):
            out = out * cyclotomic(d) ** e
        return out

    def exponent(self, d: int) -> int:
        return self.exponents.get(d, 0)


def factor_cyclotomic(p: LaurentPoly, d_max: int | None = None) -> CyclotomicProfile:
    """
    Trial-divide ``p`` by phi_2, ..., phi_{d_max} in increasing order.

    ``d_max`` defaults to the largest d whose phi_d can still divide ``p``
    (totient(d) >= sqrt(d/2), so d <= 2 * span^2). Raises NonCyclotomicFactor
    if the residual is not a unit.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if d_max is None:
        d_max = max(2, 2 * p.span() ** 2)
    rest = p
    exps: dict[int, int] = {}
    for d in range(2, d_max + 1):
        if rest.span() < 1:
            break
        if totient(d) > rest.span():
            continue
        phi = cyclotomic(d)
        while True:
            quo, rem = rest.divmod(phi)
            if not rem.is_zero():
                break
            rest = quo
            exps[d] = exps.get(d, 0) + 1
    if not rest.is_unit():
        raise NonCyclotomicFactor(f"residual {rest} of {p} is not a unit")
    return CyclotomicProfile(exps, rest.dense[0], rest.low)
