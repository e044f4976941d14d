"""Exact integration over the solid simplex and duality pairings.

The solid simplex is ``{x >= 0, x_0 + ... + x_n <= 1}``.  Integrals of
forms on the simplex ``T`` (where the sum equals 1) are never computed
directly; they go through the homogeneity identity
``(n + r + 1) * int_solid(mu) = int_T(i_X mu)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .calculus import h_r
from .errors import DegreeMismatch, DimensionMismatch, NotPolynomial
from .exterior import DiffForm, TForm, complement, merge_sign, monomial_coordinates, wedge
from .linalg import determinant, matrix_rank
from .spaces import FormSpace, basis_H, basis_P, basis_Pminus, from_T, ring_subspace


@lru_cache(maxsize=None)
def integrate_monomial_Tbold(exponents: tuple[int, ...]) -> Fraction:
    """Moment ``prod(a_i!) / (|a| + n + 1)!`` of the solid simplex."""
    exponents = tuple(exponents)
    return Fraction(prod(factorial(a) for a in exponents), factorial(sum(exponents) + len(exponents)))


def integrate_Tbold(mu: DiffForm) -> Fraction:
    """Integral of a top-degree polynomial form over the solid simplex."""
    if mu.degree != mu.nvars:
        if not mu:
            return Fraction(0)
        raise DegreeMismatch(f"need a {mu.nvars}-form, got degree {mu.degree}")
    if not mu.is_polynomial():
        raise NotPolynomial("integrand carries a negative power of s")
    top = tuple(range(mu.nvars))
    c = mu.coefficient(top)
    poly = c.to_polynomial()
    return sum((v * integrate_monomial_Tbold(m) for m, v in poly.terms.items()), Fraction(0))


def pair_T(a: TForm, b: TForm, r: int, r_prime: int) -> Fraction:
    """Integral over T of ``a ^ b``, for ``a`` of degree k and ``b`` of degree n - k.

    ``a`` is extended by ``h_r`` and ``b`` by ``h_{r'}(.) ^ ds``; the wedge of
    the two extensions is always polynomial, even when ``h_r(a)`` is not.
    """
    n = a.nvars
    if b.nvars != n:
        raise DimensionMismatch("both forms must live on the same simplex")
    if not a or not b:
        return Fraction(0)
    if a.degree + b.degree != n:
        raise DegreeMismatch(f"degrees {a.degree} + {b.degree} do not add up to {n}")
    alpha = h_r(a, r)
    beta = from_T(b, "P", r_prime)
    mu = wedge(alpha, beta)
    sign = -1 if n % 2 else 1
    return sign * (n + r + r_prime + 1) * integrate_Tbold(mu)


def _pair_coordinates(left: dict, right_by_index: dict, nvars: int) -> Fraction:
    total = Fraction(0)
    for (I, a), c in left.items():
        J = complement(I, nvars)
        partners = right_by_index.get(J)
        if not partners:
            continue
        sign, _ = merge_sign(I, J)
        acc = 0
        for b, c2 in partners:
            acc += c2 * integrate_monomial_Tbold(tuple(x + y for x, y in zip(a, b)))
        total += sign * c * acc
    return total


@dataclass(frozen=True, eq=False)
class PairingMatrix:
    """``entries[i][j]`` is the solid-simplex integral of ``rows[i] ^ cols[j]``."""

    rows: FormSpace
    cols: FormSpace
    entries: tuple[tuple[Fraction, ...], ...]
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows.dim, self.cols.dim

    @property
    def is_square(self) -> bool:
        return self.rows.dim == self.cols.dim

    def rank(self) -> int:
        if "rank" not in self._cache:
            self._cache["rank"] = matrix_rank(self.entries)
        return self._cache["rank"]

    def determinant(self) -> Fraction:
        if not self.is_square:
            raise ValueError(f"determinant of a {self.shape[0]}x{self.shape[1]} matrix")
        if "det" not in self._cache:
            self._cache["det"] = determinant(self.entries)
        return self._cache["det"]

    def is_nondegenerate(self) -> bool:
        return self.is_square and self.rank() == self.rows.dim

    def to_csv(self) -> str:
        return "\n".join(",".join(str(x) for x in row) for row in self.entries)


def pairing_matrix(A: FormSpace, B: FormSpace) -> PairingMatrix:
    if A.nvars != B.nvars:
        raise DimensionMismatch(f"{A.label} and {B.label} live in different orthants")
    if A.form_degree + B.form_degree != A.nvars:
        raise DegreeMismatch(
            f"form degrees {A.form_degree} + {B.form_degree} do not add up to {A.nvars}"
        )
    grouped = []
    for beta in B.basis:
        by_index: dict = {}
        for (J, b), c in monomial_coordinates(beta).items():
            by_index.setdefault(J, []).append((b, c))
        grouped.append(by_index)
    entries = []
    for alpha in A.basis:
        coords = monomial_coordinates(alpha)
        entries.append(tuple(_pair_coordinates(coords, g, A.nvars) for g in grouped))
    return PairingMatrix(A, B, tuple(entries))


@dataclass(frozen=True)
class PairingCheck:
    name: str
    rows: str
    cols: str
    shape: tuple[int, int]
    rank: int | None
    determinant: Fraction | None
    skipped: str | None = None

    @property
    def passed(self) -> bool:
        if self.skipped:
            return True
        return self.shape[0] == self.shape[1] and self.rank == self.shape[0] and self.determinant != 0


@dataclass(frozen=True)
class DualityReport:
    n: int
    r: int
    k: int
    checks: tuple[PairingCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def check_pairing(name: str, A: FormSpace, B: FormSpace) -> PairingCheck:
    M = pairing_matrix(A, B)
    det = M.determinant() if M.is_square else None
    return PairingCheck(name, A.label, B.label, M.shape, M.rank(), det)


def verify_duality(n: int, r: int, k: int) -> DualityReport:
    """Nondegeneracy of Pminus_r^k x ringP_{r+k}^{n-k} and P_r^k x ringPminus_{r+k+1}^{n-k}."""
    checks = []
    if r >= 1:
        checks.append(
            check_pairing(
                "Pminus-ringP",
                basis_Pminus(n, r, k),
                ring_subspace(basis_P(n, r + k, n - k)),
            )
        )
    else:
        checks.append(PairingCheck("Pminus-ringP", "", "", (0, 0), None, None, skipped="r = 0"))
    checks.append(
        check_pairing(
            "P-ringPminus",
            basis_P(n, r, k),
            ring_subspace(basis_Pminus(n, r + k + 1, n - k)),
        )
    )
    return DualityReport(n, r, k, tuple(checks))


def verify_h_duality(n: int, r: int, k: int) -> DualityReport:
    """Nondegeneracy of H_r^k x ringH_{r+k}^{n+1-k}."""
    check = check_pairing("H-ringH", basis_H(n, r, k), ring_subspace(basis_H(n, r + k, n + 1 - k)))
    return DualityReport(n, r, k, (check,))
