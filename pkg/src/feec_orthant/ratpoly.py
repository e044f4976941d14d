"""Sparse multivariate polynomials over the rationals, and the ring localized at s.

A :class:`Polynomial` lives in a fixed number of variables ``nvars``; on the
orthant this is ``n + 1`` and the distinguished linear form is
``s = x_0 + ... + x_n``.  :class:`SLocalPoly` represents ``numerator / s**m``
and is kept normalized so that the numerator is never divisible by ``s`` when
``m > 0``.

Coefficients are Python ``int`` or :class:`fractions.Fraction`; integral
fractions are stored as ``int`` to keep arithmetic cheap.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from types import MappingProxyType
from typing import Union

from .errors import (
    DegreeTooHigh,
    DimensionMismatch,
    NotDivisible,
    NotHomogeneous,
    NotPolynomial,
    ZeroPolynomial,
)

Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]

_LETTERS = ("x", "y", "z", "w")


def scalar(value) -> Scalar:
    """Coerce ``value`` to an exact rational, preferring ``int``."""
    if isinstance(value, bool):
        raise TypeError("bool is not a valid coefficient")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, Rational):
        return scalar(Fraction(value.numerator, value.denominator))
    if isinstance(value, str):
        return scalar(Fraction(value))
    raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")


def default_names(count: int) -> tuple[str, ...]:
    """Variable names for ``count`` ambient coordinates: x, y, z, w or x1, x2, ..."""
    if count <= len(_LETTERS):
        return _LETTERS[:count]
    return tuple(f"x{i + 1}" for i in range(count))


def grlex_key(mono: Monomial):
    # descending graded lex when used with sorted()
    return (-sum(mono), tuple(-e for e in mono))


def _format_scalar(c: Scalar) -> str:
    return str(c)


def format_monomial(mono: Monomial, names) -> str:
    parts = []
    for name, e in zip(names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


class Polynomial:
    """Immutable sparse polynomial in ``nvars`` variables.

    >>> x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    >>> (x + y) * (x - y) == x**2 - y**2
    True
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping | Iterable = ()):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Scalar] = {}
        for mono, c in items:
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars:
                raise DimensionMismatch(f"monomial {mono} does not have {nvars} exponents")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            acc[mono] = acc.get(mono, 0) + scalar(c)
        self.nvars = nvars
        self._terms = {m: scalar(c) for m, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> Polynomial:
        # trusted constructor: tuple keys, no zero coefficients
        obj = object.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> Polynomial:
        c = scalar(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def one(cls, nvars: int) -> Polynomial:
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, i: int) -> Polynomial:
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        mono = tuple(1 if j == i else 0 for j in range(nvars))
        return cls._raw(nvars, {mono: 1})

    @classmethod
    def monomial(cls, exponents, c=1) -> Polynomial:
        exponents = tuple(exponents)
        return cls(len(exponents), {exponents: c})

    @classmethod
    def s(cls, nvars: int) -> Polynomial:
        """The sum of all variables."""
        return power_of_s(nvars, 1)

    @classmethod
    def p(cls, nvars: int) -> Polynomial:
        """The product of all variables."""
        return cls._raw(nvars, {(1,) * nvars: 1})

    # container protocol

    @property
    def terms(self) -> Mapping[Monomial, Scalar]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> list[tuple[Monomial, Scalar]]:
        """Terms in descending graded lexicographic order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0,) * self.nvars in self._terms)

    def constant_term(self) -> Scalar:
        return self._terms.get((0,) * self.nvars, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, SLocalPoly):
            return other == self
        try:
            c = scalar(other)
        except TypeError:
            return NotImplemented
        return self.is_constant() and self.constant_term() == c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {self.format()!r})"

    def __str__(self) -> str:
        return self.format()

    def format(self, names=None) -> str:
        if names is None:
            names = default_names(self.nvars)
        if not self._terms:
            return "0"
        out = []
        for i, (mono, c) in enumerate(self.sorted_terms()):
            body = format_monomial(mono, names)
            neg = c < 0
            mag = -c if neg else c
            if not body:
                text = _format_scalar(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{_format_scalar(mag)}*{body}"
            if i == 0:
                out.append(f"-{text}" if neg else text)
            else:
                out.append(f" - {text}" if neg else f" + {text}")
        return "".join(out)

    # arithmetic

    def _check(self, other: Polynomial) -> None:
        if other.nvars != self.nvars:
            raise DimensionMismatch(f"{self.nvars} vs {other.nvars} variables")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, SLocalPoly):
            return None
        try:
            return Polynomial.constant(self.nvars, other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in o._terms.items():
            v = terms.get(m, 0) + c
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return Polynomial._raw(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c) -> Polynomial:
        c = scalar(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(self.nvars, {m: scalar(v * c) for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            terms: dict[Monomial, Scalar] = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    m = tuple(a + b for a, b in zip(m1, m2))
                    terms[m] = terms.get(m, 0) + c1 * c2
            return Polynomial._raw(self.nvars, {m: scalar(c) for m, c in terms.items() if c})
        if isinstance(other, SLocalPoly):
            return NotImplemented
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.one(self.nvars)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other):
        c = scalar(other)
        return self.scale(Fraction(1) / c)

    # structure

    def degree(self) -> int:
        """Maximum total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def homogeneous_degree(self) -> int:
        return homogeneous_degree(self)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def diff(self, i: int) -> Polynomial:
        terms = {}
        for m, c in self._terms.items():
            e = m[i]
            if e:
                terms[m[:i] + (e - 1,) + m[i + 1 :]] = c * e
        return Polynomial._raw(self.nvars, terms)

    def evaluate(self, point) -> Scalar:
        if len(point) != self.nvars:
            raise DimensionMismatch("point has wrong length")
        total = 0
        for m, c in self._terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = v * x**e
            total += v
        return scalar(total) if not isinstance(total, float) else total

    def substitute(self, i: int, replacement) -> Polynomial:
        return substitute(self, i, replacement)

    def divide_by_s(self) -> Polynomial:
        return divide_by_s(self)

    def homogenize(self, r: int) -> Polynomial:
        return homogenize(self, r)

    def divide_by_monomial(self, mono: Monomial) -> Polynomial:
        terms = {}
        for m, c in self._terms.items():
            q = tuple(a - b for a, b in zip(m, mono))
            if any(e < 0 for e in q):
                raise NotDivisible(f"{self} is not divisible by {format_monomial(mono, default_names(self.nvars))}")
            terms[q] = c
        return Polynomial._raw(self.nvars, terms)

    def embed(self, nvars: int) -> Polynomial:
        """View as a polynomial in more variables by appending zero exponents."""
        pad = (0,) * (nvars - self.nvars)
        if nvars < self.nvars:
            raise DimensionMismatch("cannot embed into fewer variables")
        return Polynomial._raw(nvars, {m + pad: c for m, c in self._terms.items()})

    def drop_variable(self, i: int) -> Polynomial:
        """Remove variable ``i``, which must not occur."""
        terms = {}
        for m, c in self._terms.items():
            if m[i]:
                raise ValueError(f"variable {i} occurs in {self}")
            terms[m[:i] + m[i + 1 :]] = c
        return Polynomial._raw(self.nvars - 1, terms)

    def divides_zero_at_face(self, i: int) -> bool:
        """True when every term contains x_i, i.e. the polynomial vanishes on x_i = 0."""
        return all(m[i] > 0 for m in self._terms)


@lru_cache(maxsize=None)
def power_of_s(nvars: int, j: int) -> Polynomial:
    """``s**j`` in ``nvars`` variables (cached)."""
    if j == 0:
        return Polynomial.one(nvars)
    if j == 1:
        terms = {tuple(1 if a == b else 0 for b in range(nvars)): 1 for a in range(nvars)}
        return Polynomial._raw(nvars, terms)
    return power_of_s(nvars, j - 1) * power_of_s(nvars, 1)


def homogeneous_degree(p: Polynomial) -> int:
    """Common total degree of all terms of a nonzero polynomial."""
    if not p._terms:
        raise ZeroPolynomial("the zero polynomial has no homogeneous degree")
    degrees = {sum(m) for m in p._terms}
    if len(degrees) != 1:
        raise NotHomogeneous(f"{p} mixes degrees {sorted(degrees)}")
    return degrees.pop()


def homogenize(p: Polynomial, r: int) -> Polynomial:
    """Multiply each degree-m term by s**(r - m)."""
    result: dict[Monomial, Scalar] = {}
    for m, c in p._terms.items():
        dm = sum(m)
        if dm > r:
            raise DegreeTooHigh(f"term of degree {dm} exceeds {r}")
        if dm == r:
            result[m] = result.get(m, 0) + c
            continue
        for sm, sc in power_of_s(p.nvars, r - dm)._terms.items():
            key = tuple(a + b for a, b in zip(m, sm))
            result[key] = result.get(key, 0) + c * sc
    return Polynomial._raw(p.nvars, {m: scalar(c) for m, c in result.items() if c})


def substitute(p: Polynomial, i: int, replacement) -> Polynomial:
    """Replace x_i by ``replacement`` (a polynomial in the same variables, or a scalar)."""
    if not isinstance(replacement, Polynomial):
        replacement = Polynomial.constant(p.nvars, replacement)
    if replacement.nvars != p.nvars:
        raise DimensionMismatch("replacement lives in a different number of variables")
    by_power: dict[int, dict[Monomial, Scalar]] = {}
    for m, c in p._terms.items():
        rest = m[:i] + (0,) + m[i + 1 :]
        by_power.setdefault(m[i], {})[rest] = c
    result = Polynomial.zero(p.nvars)
    powers = {0: Polynomial.one(p.nvars)}
    for e in sorted(by_power):
        if e not in powers:
            powers[e] = replacement**e
        result = result + Polynomial._raw(p.nvars, by_power[e]) * powers[e]
    return result


def _vanishes_on_probe(p: Polynomial) -> bool:
    # s = 0 at (1, -1, 0, ..., 0); only terms supported on x_0, x_1 survive
    total = 0
    for m, c in p._terms.items():
        if any(m[2:]):
            continue
        total += -c if m[1] % 2 else c
    return total == 0


def divide_by_s(p: Polynomial) -> Polynomial:
    """Exact quotient ``p / s``; raises :class:`NotDivisible` otherwise.

    Treats ``p`` as univariate in the last variable, where ``s`` is monic,
    and runs synthetic division by ``x_last + (x_0 + ... + x_{last-1})``.
    """
    nv = p.nvars
    if nv < 1:
        raise NotDivisible("s is undefined with no variables")
    if not p._terms:
        return p
    if nv >= 2 and not _vanishes_on_probe(p):
        raise NotDivisible(f"{p} is not divisible by s")
    last = nv - 1
    coeffs: dict[int, dict[Monomial, Scalar]] = {}
    for m, c in p._terms.items():
        coeffs.setdefault(m[last], {})[m[:last] + (0,)] = c
    top = max(coeffs)
    rest_sum = Polynomial._raw(nv, {tuple(1 if a == b else 0 for b in range(nv)): 1 for a in range(last)})
    c = {j: Polynomial._raw(nv, t) for j, t in coeffs.items()}
    zero = Polynomial.zero(nv)
    q: dict[int, Polynomial] = {}
    if top == 0:
        raise NotDivisible(f"{p} is not divisible by s")
    q[top - 1] = c[top]
    for j in range(top - 1, 0, -1):
        q[j - 1] = c.get(j, zero) - rest_sum * q[j]
    if c.get(0, zero) - rest_sum * q[0]:
        raise NotDivisible(f"{p} is not divisible by s")
    terms: dict[Monomial, Scalar] = {}
    for j, poly in q.items():
        for m, v in poly._terms.items():
            terms[m[:last] + (j,)] = v
    return Polynomial._raw(nv, terms)


class SLocalPoly:
    """``numerator / s**s_power`` with the numerator not divisible by s when s_power > 0.

    A negative ``s_power`` at construction multiplies the numerator instead.
    """

    __slots__ = ("numerator", "s_power", "_hash")

    def __init__(self, numerator: Polynomial, s_power: int = 0):
        if s_power < 0:
            numerator = numerator * power_of_s(numerator.nvars, -s_power)
            s_power = 0
        if not numerator:
            s_power = 0
        while s_power > 0:
            try:
                numerator = divide_by_s(numerator)
            except NotDivisible:
                break
            s_power -= 1
        self.numerator = numerator
        self.s_power = s_power
        self._hash = None

    @classmethod
    def _raw(cls, numerator: Polynomial, s_power: int) -> SLocalPoly:
        obj = object.__new__(cls)
        obj.numerator = numerator
        obj.s_power = s_power
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, value, nvars: int) -> SLocalPoly:
        if isinstance(value, SLocalPoly):
            if value.nvars != nvars:
                raise DimensionMismatch(f"{value.nvars} vs {nvars} variables")
            return value
        if isinstance(value, Polynomial):
            if value.nvars != nvars:
                raise DimensionMismatch(f"{value.nvars} vs {nvars} variables")
            return cls._raw(value, 0)
        return cls._raw(Polynomial.constant(nvars, value), 0)

    @property
    def nvars(self) -> int:
        return self.numerator.nvars

    def __bool__(self) -> bool:
        return bool(self.numerator)

    def is_zero(self) -> bool:
        return not self.numerator

    def is_polynomial(self) -> bool:
        return self.s_power == 0

    def to_polynomial(self) -> Polynomial:
        if self.s_power:
            raise NotPolynomial(f"{self} has a factor s^-{self.s_power}")
        return self.numerator

    def degree(self) -> int:
        """Numerator degree minus s_power; only meaningful for homogeneous values."""
        return self.numerator.degree() - self.s_power

    def homogeneous_degree(self) -> int:
        return homogeneous_degree(self.numerator) - self.s_power

    def __eq__(self, other) -> bool:
        if isinstance(other, SLocalPoly):
            return self.s_power == other.s_power and self.numerator == other.numerator
        if isinstance(other, Polynomial):
            return self.s_power == 0 and self.numerator == other
        try:
            c = scalar(other)
        except TypeError:
            return NotImplemented
        return self.s_power == 0 and self.numerator == c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.numerator) if self.s_power == 0 else hash((self.numerator, self.s_power))
        return self._hash

    def _lift(self, other):
        if isinstance(other, SLocalPoly):
            if other.nvars != self.nvars:
                raise DimensionMismatch(f"{self.nvars} vs {other.nvars} variables")
            return other
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise DimensionMismatch(f"{self.nvars} vs {other.nvars} variables")
            return SLocalPoly._raw(other, 0)
        try:
            return SLocalPoly._raw(Polynomial.constant(self.nvars, other), 0)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o.numerator:
            return self
        if not self.numerator:
            return o
        if self.s_power == o.s_power:
            num = self.numerator + o.numerator
            return SLocalPoly(num, self.s_power) if self.s_power else SLocalPoly._raw(num, 0)
        top = max(self.s_power, o.s_power)
        a = self.numerator * power_of_s(self.nvars, top - self.s_power)
        b = o.numerator * power_of_s(self.nvars, top - o.s_power)
        return SLocalPoly(a + b, top)

    __radd__ = __add__

    def __neg__(self) -> SLocalPoly:
        return SLocalPoly._raw(-self.numerator, self.s_power)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        num = self.numerator * o.numerator
        m = self.s_power + o.s_power
        return SLocalPoly(num, m) if m else SLocalPoly._raw(num, 0)

    __rmul__ = __mul__

    def scale(self, c) -> SLocalPoly:
        return SLocalPoly._raw(self.numerator.scale(c), self.s_power if c else 0)

    def __truediv__(self, other):
        return self.scale(Fraction(1) / scalar(other))

    def mul_s(self, m: int = 1) -> SLocalPoly:
        """Multiply by ``s**m``; negative ``m`` divides."""
        return SLocalPoly(self.numerator, self.s_power - m)

    def diff(self, i: int) -> SLocalPoly:
        # d(N / s^m) = (N_i s - m N) / s^(m+1)
        if not self.s_power:
            return SLocalPoly._raw(self.numerator.diff(i), 0)
        m = self.s_power
        num = self.numerator.diff(i) * power_of_s(self.nvars, 1) - self.numerator.scale(m)
        return SLocalPoly(num, m + 1)

    def substitute(self, i: int, replacement) -> SLocalPoly:
        """Substitute into the numerator only; the s-power is kept formally."""
        return SLocalPoly(substitute(self.numerator, i, replacement), self.s_power)

    def __repr__(self) -> str:
        return f"SLocalPoly({self.format()!r})"

    def __str__(self) -> str:
        return self.format()

    def format(self, names=None) -> str:
        body = self.numerator.format(names)
        if not self.s_power:
            return body
        den = "s" if self.s_power == 1 else f"s^{self.s_power}"
        if len(self.numerator) > 1:
            body = f"({body})"
        return f"({body}/{den})"
