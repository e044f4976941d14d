"""The degenerate inner product g (with <dx_i, dx_i> = x_i) and its Hodge star.

The star is taken against the Euclidean volume form, so it is defined by
``alpha ^ star(beta) = <alpha, beta>_g vol`` and squares to ``+-p`` where
``p = x_0 * ... * x_n``.
"""

from __future__ import annotations

from .errors import DegreeMismatch, DimensionMismatch, NotDivisible, NotInRange
from .exterior import DiffForm, IndexSet, complement, merge_sign
from .ratpoly import Polynomial, SLocalPoly


def _covector_weight(I: IndexSet, nvars: int) -> Polynomial:
    mono = [0] * nvars
    for i in I:
        mono[i] = 1
    return Polynomial._raw(nvars, {tuple(mono): 1})


def inner_g(alpha: DiffForm, beta: DiffForm) -> SLocalPoly:
    if alpha.nvars != beta.nvars:
        raise DimensionMismatch(f"{alpha.nvars} vs {beta.nvars} coordinates")
    if alpha.degree != beta.degree and alpha and beta:
        raise DegreeMismatch(f"cannot pair a {alpha.degree}-form with a {beta.degree}-form")
    total = SLocalPoly.coerce(0, alpha.nvars)
    for I, a in alpha._terms.items():
        b = beta._terms.get(I)
        if b is None:
            continue
        total = total + a * b * _covector_weight(I, alpha.nvars)
    return total


def hodge_star_g(beta: DiffForm) -> DiffForm:
    """Closed form on basis terms: ``f dx_I -> sign(I, I^c) f x_I dx_{I^c}``."""
    nv = beta.nvars
    terms = {}
    for I, c in beta._terms.items():
        J = complement(I, nv)
        sign, _ = merge_sign(I, J)
        v = c * _covector_weight(I, nv)
        terms[J] = v if sign > 0 else -v
    return DiffForm._raw(nv, nv - beta.degree, terms)


def hodge_star_g_inverse(beta: DiffForm) -> DiffForm:
    """Polynomial preimage of ``beta`` under the star, when one exists.

    Uses ``star^-1 = (-1)^(k(n+1-k)) star / p`` and raises
    :class:`NotInRange` when some coefficient of ``star(beta)`` is not
    divisible by ``p``.
    """
    nv = beta.nvars
    k = beta.degree
    starred = hodge_star_g(beta)
    p_mono = (1,) * nv
    negate = (k * (nv - k)) % 2 == 1
    terms = {}
    for J, c in starred._terms.items():
        try:
            num = c.numerator.divide_by_monomial(p_mono)
        except NotDivisible as exc:
            raise NotInRange(f"{beta} is not the star of a form with polynomial coefficients") from exc
        v = SLocalPoly._raw(num, c.s_power)
        terms[J] = -v if negate else v
    return DiffForm._raw(nv, nv - k, terms)
