"""Finite-dimensional spaces of homogeneous polynomial forms on the orthant.

``H`` is every homogeneous polynomial k-form of degree r.  ``P`` is the
vertical part ``H_r^k ^ ds`` (so its elements are (k+1)-forms) and
``Pminus`` the horizontal part ``i_X H_{r-1}^{k+1}``.  The ``ring*`` kinds
are the subspaces whose pullback to every coordinate face vanishes.

Bases are built by enumerating generators in a fixed order and keeping the
ones that are independent of their predecessors, so they are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations_with_replacement

from .calculus import h_r, i_X, j_X, wedge_ds
from .errors import DimensionMismatch, ExcludedParameter, NotPolynomialResult
from .exterior import (
    DiffForm,
    TForm,
    index_sets,
    monomial_coordinates,
    pullback_face,
    restrict_to_T,
)
from .linalg import Echelon, primitive
from .ratpoly import Polynomial, SLocalPoly, grlex_key

KINDS = ("H", "P", "Pminus", "ringH", "ringP", "ringPminus")


def monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total ``degree``, largest first in graded lex order."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        mono = [0] * nvars
        for i in combo:
            mono[i] += 1
        out.append(tuple(mono))
    out.sort(key=grlex_key)
    return out


def base_kind(kind: str) -> str:
    return kind[4:] if kind.startswith("ring") else kind


@dataclass(frozen=True, eq=False)
class FormSpace:
    """An immutable, explicitly spanned space of polynomial forms.

    ``k`` and ``r`` are the labels of the space, not necessarily the form
    degree: elements of a ``P`` space are (k+1)-forms.
    """

    kind: str
    n: int
    r: int
    k: int
    basis: tuple[DiffForm, ...]

    @property
    def nvars(self) -> int:
        return self.n + 1

    @property
    def form_degree(self) -> int:
        return self.k + 1 if base_kind(self.kind) == "P" else self.k

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __getitem__(self, i):
        return self.basis[i]

    @property
    def label(self) -> str:
        return f"{self.kind}_{self.r}^{self.k}(n={self.n})"

    def __repr__(self) -> str:
        return f"FormSpace({self.label}, dim={self.dim})"

    @cached_property
    def _echelon(self) -> Echelon:
        e = Echelon()
        for j, b in enumerate(self.basis):
            e.add(monomial_coordinates(b), j)
        return e

    def coordinates(self, alpha: DiffForm) -> list | None:
        """Coefficients of ``alpha`` in the basis, or None when it is outside the span."""
        if alpha.nvars != self.nvars:
            raise DimensionMismatch(f"form has {alpha.nvars} coordinates, space has {self.nvars}")
        if not alpha:
            return [0] * self.dim
        if alpha.degree != self.form_degree or not alpha.is_polynomial():
            return None
        sol = self._echelon.solve(monomial_coordinates(alpha))
        if sol is None:
            return None
        return [sol.get(j, 0) for j in range(self.dim)]

    def __contains__(self, alpha: DiffForm) -> bool:
        return self.coordinates(alpha) is not None

    def combine(self, coeffs) -> DiffForm:
        total = DiffForm.zero(self.nvars, self.form_degree)
        for c, b in zip(coeffs, self.basis):
            if c:
                total = total + b.multiply(c)
        return total


def _check_range(n: int, r: int, k: int, max_k: int) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    if not 0 <= k <= max_k:
        raise ValueError(f"k must lie in 0..{max_k}, got {k}")


def _independent(kind: str, n: int, r: int, k: int, generators) -> FormSpace:
    e = Echelon()
    kept = []
    for g in generators:
        if g and e.add(monomial_coordinates(g), len(kept)):
            kept.append(g)
    return FormSpace(kind, n, r, k, tuple(kept))


def _h_generators(n: int, r: int, k: int):
    nv = n + 1
    monos = monomials(nv, r)
    for I in index_sets(nv, k):
        for mono in monos:
            yield DiffForm._raw(nv, k, {I: SLocalPoly._raw(Polynomial._raw(nv, {mono: 1}), 0)})


@lru_cache(maxsize=None)
def basis_H(n: int, r: int, k: int) -> FormSpace:
    _check_range(n, r, k, n + 1)
    return FormSpace("H", n, r, k, tuple(_h_generators(n, r, k)))


@lru_cache(maxsize=None)
def basis_P(n: int, r: int, k: int) -> FormSpace:
    _check_range(n, r, k, n)
    return _independent("P", n, r, k, (wedge_ds(b) for b in basis_H(n, r, k)))


@lru_cache(maxsize=None)
def basis_Pminus(n: int, r: int, k: int) -> FormSpace:
    if r == 0:
        raise ExcludedParameter("Pminus is only defined here for r >= 1")
    _check_range(n, r, k, n + 1)
    if k == n + 1:
        return FormSpace("Pminus", n, r, k, ())
    return _independent("Pminus", n, r, k, (i_X(b) for b in basis_H(n, r - 1, k + 1)))


def _face_vector(alpha: DiffForm) -> dict:
    vec = {}
    for i in range(alpha.nvars):
        for key, v in monomial_coordinates(pullback_face(alpha, i)).items():
            vec[(i,) + key] = v
    return vec


@lru_cache(maxsize=None)
def _ring_of(space: FormSpace) -> FormSpace:
    relations = Echelon()
    for j, b in enumerate(space.basis):
        relations.add(_face_vector(b), j)
    kernel = []
    for rel in relations.relations:
        coeffs = primitive(rel)
        kernel.append(space.combine([coeffs.get(j, 0) for j in range(space.dim)]))
    return FormSpace("ring" + space.kind, space.n, space.r, space.k, tuple(kernel))


def ring_subspace(space: FormSpace) -> FormSpace:
    """Elements of ``space`` whose pullback to every face x_i = 0 vanishes."""
    if space.kind.startswith("ring"):
        return space
    return _ring_of(space)


_BUILDERS = {"H": basis_H, "P": basis_P, "Pminus": basis_Pminus}


def form_space(kind: str, n: int, r: int, k: int) -> FormSpace:
    """Dispatch on one of :data:`KINDS`."""
    if kind not in KINDS:
        raise ValueError(f"unknown space kind {kind!r}; expected one of {', '.join(KINDS)}")
    space = _BUILDERS[base_kind(kind)](n, r, k)
    return ring_subspace(space) if kind.startswith("ring") else space


def member(space: FormSpace, alpha: DiffForm) -> tuple[bool, list | None]:
    coords = space.coordinates(alpha)
    return coords is not None, coords


# correspondence with forms on T


def to_T(alpha: DiffForm, kind: str) -> TForm:
    """``i^*`` on horizontal spaces, ``i^* j_X`` on vertical ones."""
    if base_kind(kind) == "P":
        return restrict_to_T(j_X(alpha))
    return restrict_to_T(alpha)


def from_T(a: TForm, kind: str, r: int) -> DiffForm:
    """Inverse of :func:`to_T`: ``h_r`` for Pminus, ``h_r(.) ^ ds`` for P.

    Raises :class:`NotPolynomialResult` when the extension is not
    polynomial, which means ``a`` is not in the matching space on T.
    """
    base = base_kind(kind)
    if base == "H":
        raise ValueError("the correspondence is defined for P and Pminus spaces")
    extended = h_r(a, r)
    if base == "P":
        extended = wedge_ds(extended)
    if not extended.is_polynomial():
        raise NotPolynomialResult(f"extension of {a} with r={r} is not polynomial")
    return extended
