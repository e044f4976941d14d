"""Differential forms on the orthant and on the simplex T.

Index sets are strictly increasing tuples of 0-based coordinate indices, so
``(0, 2)`` is ``dx_0 ^ dx_2``.  On the orthant there are ``n + 1``
coordinates and coefficients are :class:`SLocalPoly`; forms on ``T`` use the
first ``n`` coordinates (``x_n`` is eliminated through ``s = 1``) and have
:class:`Polynomial` coefficients.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from types import MappingProxyType

from .errors import DegreeTooHigh, DimensionMismatch, NotHomogeneous, NotPolynomial, ZeroPolynomial
from .ratpoly import Polynomial, SLocalPoly, homogenize, power_of_s, scalar

IndexSet = tuple[int, ...]


def sort_sign(indices) -> tuple[int, IndexSet]:
    """Sign of the permutation sorting ``indices``; sign 0 on repeats."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return 0, ()
    inversions = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx)) if idx[a] > idx[b])
    return (-1 if inversions % 2 else 1), tuple(sorted(idx))


def merge_sign(I: IndexSet, J: IndexSet) -> tuple[int, IndexSet]:
    """``dx_I ^ dx_J = sign * dx_K``; sign 0 when I and J overlap."""
    if not I:
        return 1, J
    if not J:
        return 1, I
    sj = set(J)
    if any(i in sj for i in I):
        return 0, ()
    inversions = 0
    for i in I:
        for j in J:
            if j < i:
                inversions += 1
    return (-1 if inversions % 2 else 1), tuple(sorted(I + J))


def complement(I: IndexSet, nvars: int) -> IndexSet:
    present = set(I)
    return tuple(i for i in range(nvars) if i not in present)


class AlternatingForm:
    """Common machinery for forms with coefficients in a commutative ring.

    Subclasses fix the coefficient ring through :meth:`_coerce`.
    """

    __slots__ = ("nvars", "degree", "_terms", "_hash")

    def __init__(self, nvars: int, degree: int, terms: Mapping | Iterable = ()):
        if degree < 0:
            raise ValueError("form degree must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[IndexSet, object] = {}
        for idx, c in items:
            idx = tuple(int(i) for i in idx)
            if len(idx) != degree:
                raise ValueError(f"index set {idx} does not have {degree} entries")
            if any(not 0 <= i < nvars for i in idx):
                raise IndexError(f"index set {idx} out of range for {nvars} coordinates")
            sign, key = sort_sign(idx)
            if not sign:
                continue
            c = self._coerce(c, nvars)
            if sign < 0:
                c = -c
            acc[key] = acc[key] + c if key in acc else c
        self.nvars = nvars
        self.degree = degree
        self._terms = {k: v for k, v in acc.items() if v}
        self._hash = None

    @classmethod
    def _coerce(cls, value, nvars):
        raise NotImplementedError

    @classmethod
    def _raw(cls, nvars: int, degree: int, terms: dict):
        obj = object.__new__(cls)
        obj.nvars = nvars
        obj.degree = degree
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, nvars: int, degree: int):
        return cls._raw(nvars, degree, {})

    @classmethod
    def scalar(cls, value, nvars: int):
        c = cls._coerce(value, nvars)
        return cls._raw(nvars, 0, {(): c} if c else {})

    @classmethod
    def dx(cls, nvars: int, i: int):
        if not 0 <= i < nvars:
            raise IndexError(f"no coordinate {i} among {nvars}")
        return cls._raw(nvars, 1, {(i,): cls._coerce(1, nvars)})

    @classmethod
    def basis_covector(cls, nvars: int, I: IndexSet, coefficient=1):
        return cls(nvars, len(I), {tuple(I): coefficient})

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def sorted_terms(self):
        return sorted(self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, I) -> object:
        sign, key = sort_sign(I)
        c = self._terms.get(key)
        if c is None or not sign:
            return self._coerce(0, self.nvars)
        return c if sign > 0 else -c

    def __eq__(self, other) -> bool:
        if isinstance(other, AlternatingForm):
            if type(other) is not type(self) or other.nvars != self.nvars:
                return False
            if not self._terms and not other._terms:
                return True
            return self.degree == other.degree and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.nvars, self.degree, frozenset(self._terms.items())))
        return self._hash

    def _same_space(self, other) -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.nvars != self.nvars:
            raise DimensionMismatch(f"{self.nvars} vs {other.nvars} coordinates")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, AlternatingForm):
            return NotImplemented
        self._same_space(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        if other.degree != self.degree:
            raise ValueError(f"cannot add forms of degree {self.degree} and {other.degree}")
        terms = dict(self._terms)
        for k, c in other._terms.items():
            if k in terms:
                v = terms[k] + c
                if v:
                    terms[k] = v
                else:
                    del terms[k]
            else:
                terms[k] = c
        return type(self)._raw(self.nvars, self.degree, terms)

    def __radd__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        return NotImplemented

    def __neg__(self):
        return type(self)._raw(self.nvars, self.degree, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, AlternatingForm):
            return NotImplemented
        return self + (-other)

    def multiply(self, factor):
        """Multiply every coefficient by a scalar or ring element."""
        f = self._coerce(factor, self.nvars)
        if not f:
            return type(self)._raw(self.nvars, self.degree, {})
        terms = {}
        for k, c in self._terms.items():
            v = c * f
            if v:
                terms[k] = v
        return type(self)._raw(self.nvars, self.degree, terms)

    def __mul__(self, other):
        if isinstance(other, AlternatingForm):
            return wedge(self, other)
        try:
            return self.multiply(other)
        except (TypeError, NotPolynomial):
            return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, AlternatingForm):
            return wedge(other, self)
        try:
            return self.multiply(other)
        except (TypeError, NotPolynomial):
            return NotImplemented

    def __xor__(self, other):
        if not isinstance(other, AlternatingForm):
            return NotImplemented
        return wedge(self, other)

    def __truediv__(self, other):
        return self.multiply(Fraction(1) / scalar(other))

    def map_coefficients(self, fn):
        terms = {}
        for k, c in self._terms.items():
            v = self._coerce(fn(c), self.nvars)
            if v:
                terms[k] = v
        return type(self)._raw(self.nvars, self.degree, terms)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.nvars}, {self.degree}, {self.format()!r})"

    def __str__(self) -> str:
        return self.format()

    def format(self, names=None) -> str:
        from .notation import format_form

        return format_form(self, names=names)


class DiffForm(AlternatingForm):
    """A k-form on the orthant in ``nvars = n + 1`` coordinates."""

    __slots__ = ()

    @classmethod
    def _coerce(cls, value, nvars):
        return SLocalPoly.coerce(value, nvars)

    @property
    def ambient_dim(self) -> int:
        return self.nvars

    @property
    def n(self) -> int:
        return self.nvars - 1

    @classmethod
    def ds(cls, nvars: int) -> DiffForm:
        one = SLocalPoly.coerce(1, nvars)
        return cls._raw(nvars, 1, {(i,): one for i in range(nvars)})

    @classmethod
    def vol(cls, nvars: int) -> DiffForm:
        return cls._raw(nvars, nvars, {tuple(range(nvars)): SLocalPoly.coerce(1, nvars)})

    def is_polynomial(self) -> bool:
        return all(c.s_power == 0 for c in self._terms.values())

    def polynomial_terms(self) -> dict[IndexSet, Polynomial]:
        """Coefficients as polynomials; raises :class:`NotPolynomial` otherwise."""
        return {k: c.to_polynomial() for k, c in self._terms.items()}

    def max_s_power(self) -> int:
        return max((c.s_power for c in self._terms.values()), default=0)

    def homogeneous_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("the zero form has no homogeneous degree")
        degrees = {c.homogeneous_degree() for c in self._terms.values()}
        if len(degrees) != 1:
            raise NotHomogeneous(f"coefficients have degrees {sorted(degrees)}")
        return degrees.pop()

    def mul_s(self, m: int = 1) -> DiffForm:
        """Multiply by ``s**m``; negative ``m`` divides."""
        terms = {k: c.mul_s(m) for k, c in self._terms.items()}
        return DiffForm._raw(self.nvars, self.degree, terms)


class TForm(AlternatingForm):
    """A k-form on the simplex T in its ``n`` free coordinates."""

    __slots__ = ()

    @classmethod
    def _coerce(cls, value, nvars):
        if isinstance(value, Polynomial):
            if value.nvars != nvars:
                raise DimensionMismatch(f"{value.nvars} vs {nvars} variables")
            return value
        if isinstance(value, SLocalPoly):
            if value.nvars != nvars:
                raise DimensionMismatch(f"{value.nvars} vs {nvars} variables")
            return value.to_polynomial()
        return Polynomial.constant(nvars, value)

    @property
    def dim(self) -> int:
        return self.nvars

    def max_coefficient_degree(self) -> int:
        return max((c.degree() for c in self._terms.values()), default=-1)


class VectorField:
    """Components indexed by coordinate; entries are polynomials or s-localized values."""

    __slots__ = ("nvars", "components")

    def __init__(self, components):
        self.components = tuple(components)
        self.nvars = len(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __repr__(self) -> str:
        return f"VectorField({[str(c) for c in self.components]})"

    @classmethod
    def euler(cls, nvars: int) -> VectorField:
        """X = sum x_i d/dx_i, the g-gradient of s."""
        return cls(Polynomial.variable(nvars, i) for i in range(nvars))

    @classmethod
    def grad_s(cls, nvars: int) -> VectorField:
        one = Polynomial.one(nvars)
        return cls(one for _ in range(nvars))

    @classmethod
    def koszul(cls, nvars: int) -> VectorField:
        """X - s grad(s) / (n+1): radial field about the barycenter, tangent to T."""
        s = Polynomial.s(nvars)
        w = Fraction(1, nvars)
        return cls(Polynomial.variable(nvars, i) - s.scale(w) for i in range(nvars))

    @classmethod
    def koszul_on_T(cls, n: int) -> VectorField:
        """The Koszul field restricted to T in coordinates x_0..x_{n-1}."""
        c = Fraction(1, n + 1)
        return cls(Polynomial.variable(n, i) - c for i in range(n))


def wedge(alpha: AlternatingForm, beta: AlternatingForm) -> AlternatingForm:
    alpha._same_space(beta)
    degree = alpha.degree + beta.degree
    cls = type(alpha)
    if degree > alpha.nvars:
        return cls._raw(alpha.nvars, degree, {})
    acc: dict[IndexSet, object] = {}
    for I, a in alpha._terms.items():
        for J, b in beta._terms.items():
            sign, K = merge_sign(I, J)
            if not sign:
                continue
            v = a * b
            if sign < 0:
                v = -v
            acc[K] = acc[K] + v if K in acc else v
    return cls._raw(alpha.nvars, degree, {k: v for k, v in acc.items() if v})


def contract_left(V: VectorField, alpha: AlternatingForm) -> AlternatingForm:
    """Interior product i_V, inserting V into the first slot."""
    if V.nvars != alpha.nvars:
        raise DimensionMismatch(f"vector field has {V.nvars} components, form has {alpha.nvars} coordinates")
    cls = type(alpha)
    if alpha.degree == 0:
        return cls._raw(alpha.nvars, 0, {})
    acc: dict[IndexSet, object] = {}
    for I, c in alpha._terms.items():
        for pos, i in enumerate(I):
            comp = V.components[i]
            if not comp:
                continue
            v = cls._coerce(c * comp, alpha.nvars)
            if pos % 2:
                v = -v
            key = I[:pos] + I[pos + 1 :]
            acc[key] = acc[key] + v if key in acc else v
    return cls._raw(alpha.nvars, alpha.degree - 1, {k: v for k, v in acc.items() if v})


def contract_right(V: VectorField, alpha: AlternatingForm) -> AlternatingForm:
    """j_V: insert V into the last slot, equal to (-1)^k i_V on (k+1)-forms."""
    result = contract_left(V, alpha)
    return -result if alpha.degree >= 1 and (alpha.degree - 1) % 2 else result


def exterior_derivative(alpha: AlternatingForm) -> AlternatingForm:
    cls = type(alpha)
    if alpha.degree >= alpha.nvars:
        return cls._raw(alpha.nvars, alpha.degree + 1, {})
    acc: dict[IndexSet, object] = {}
    for I, c in alpha._terms.items():
        for j in range(alpha.nvars):
            if j in I:
                continue
            dc = c.diff(j)
            if not dc:
                continue
            before = sum(1 for i in I if i < j)
            key = I[:before] + (j,) + I[before:]
            if before % 2:
                dc = -dc
            acc[key] = acc[key] + dc if key in acc else dc
    return cls._raw(alpha.nvars, alpha.degree + 1, {k: v for k, v in acc.items() if v})


def pullback_face(alpha: DiffForm, i: int) -> DiffForm:
    """Pull back to the face x_i = 0, kept in ambient coordinates.

    The coefficient x_i is set to zero and every term containing dx_i is
    dropped.  Any s-power is carried along formally since s stays positive
    on the face away from the origin.
    """
    if not 0 <= i < alpha.nvars:
        raise IndexError(f"no face {i} among {alpha.nvars}")
    terms = {}
    for I, c in alpha._terms.items():
        if i in I:
            continue
        v = c.substitute(i, 0)
        if v:
            terms[I] = v
    return DiffForm._raw(alpha.nvars, alpha.degree, terms)


def _eliminate_last(terms: dict[IndexSet, Polynomial], nvars: int, degree: int) -> dict[IndexSet, Polynomial]:
    # x_last := 1 - sum(others) and dx_last := -sum(d others); result has nvars - 1 variables
    last = nvars - 1
    others = [Polynomial.variable(nvars, j) for j in range(last)]
    replacement = Polynomial.one(nvars) - sum(others, Polynomial.zero(nvars))
    acc: dict[IndexSet, Polynomial] = {}

    def put(key, value):
        if key in acc:
            acc[key] = acc[key] + value
        else:
            acc[key] = value

    for I, c in terms.items():
        coeff = c.substitute(last, replacement).drop_variable(last)
        if not coeff:
            continue
        if not I or I[-1] != last:
            put(I, coeff)
            continue
        head = I[:-1]
        # dx_head ^ dx_last -> -sum_j dx_head ^ dx_j
        for j in range(last):
            if j in head:
                continue
            sign, key = merge_sign(head, (j,))
            put(key, -coeff if sign > 0 else coeff)
    return {k: v for k, v in acc.items() if v}


def restrict_to_T(alpha: DiffForm) -> TForm:
    """Pull back to the simplex s = 1, in coordinates x_0..x_{n-1}."""
    n = alpha.nvars - 1
    # s = 1 on T, so only the numerator matters
    terms = {I: c.numerator for I, c in alpha._terms.items()}
    return TForm._raw(n, alpha.degree, _eliminate_last(terms, alpha.nvars, alpha.degree))


def trace_on_T_face(a: TForm, i: int) -> TForm:
    """Trace of a form on T onto the facet of T opposite vertex ``i``.

    Facets ``i < n`` are ``x_i = 0`` and keep ambient T-coordinates; the last
    facet ``x_n = 0`` (that is, ``x_0 + ... + x_{n-1} = 1``) is parametrized
    by eliminating the last T-coordinate, so its result lives in ``n - 1``
    variables.
    """
    n = a.nvars
    if not 0 <= i <= n:
        raise IndexError(f"T has facets 0..{n}")
    if i < n:
        terms = {}
        for I, c in a._terms.items():
            if i in I:
                continue
            v = c.substitute(i, 0)
            if v:
                terms[I] = v
        return TForm._raw(n, a.degree, terms)
    return TForm._raw(n - 1, a.degree, _eliminate_last(dict(a._terms), n, a.degree))


def lift_T_representative(a: TForm, r: int) -> DiffForm:
    """Homogeneous degree-r polynomial extension of ``a`` to the orthant.

    Each coefficient is homogenized with s and index sets are kept verbatim.
    """
    nvars = a.nvars + 1
    terms = {}
    for I, c in a._terms.items():
        if c.degree() > r:
            raise DegreeTooHigh(f"coefficient {c} has degree above {r}")
        h = homogenize(c.embed(nvars), r)
        if h:
            terms[I] = SLocalPoly._raw(h, 0)
    return DiffForm._raw(nvars, a.degree, terms)


def monomial_coordinates(alpha: DiffForm | TForm) -> dict[tuple[IndexSet, tuple[int, ...]], object]:
    """Expand into the basis x^a dx_I; keys are ``(I, a)``."""
    out = {}
    for I, c in alpha._terms.items():
        poly = c.to_polynomial() if isinstance(c, SLocalPoly) else c
        for mono, v in poly._terms.items():
            out[(I, mono)] = v
    return out


@dataclass(frozen=True)
class SimplexContext:
    """Precomputed objects for the n-simplex T inside the (n+1)-orthant."""

    n: int
    s: Polynomial
    p: Polynomial
    X: VectorField
    grad_s: VectorField
    X_kappa: VectorField
    ds: DiffForm
    vol: DiffForm

    @property
    def nvars(self) -> int:
        return self.n + 1

    def faces(self) -> range:
        return range(self.n + 1)

    def s_to(self, m: int) -> Polynomial:
        return power_of_s(self.n + 1, m)


@lru_cache(maxsize=None)
def simplex(n: int) -> SimplexContext:
    if n < 0:
        raise ValueError("simplex dimension must be nonnegative")
    nv = n + 1
    return SimplexContext(
        n=n,
        s=Polynomial.s(nv),
        p=Polynomial.p(nv),
        X=VectorField.euler(nv),
        grad_s=VectorField.grad_s(nv),
        X_kappa=VectorField.koszul(nv),
        ds=DiffForm.ds(nv),
        vol=DiffForm.vol(nv),
    )


def index_sets(nvars: int, k: int):
    return combinations(range(nvars), k)
