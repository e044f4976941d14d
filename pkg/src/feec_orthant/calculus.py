"""Differential operators on orthant forms.

The tensorial operators ``ds^``, ``^ds``, ``i_X``, ``j_X`` and ``i_grad(s)`` are
thin wrappers over :func:`wedge` and the contractions; the modified
derivative is only offered on homogeneous forms, where it has the closed
form ``d(alpha) - (r + k) s^-1 ds ^ alpha``.
"""

from __future__ import annotations

from .exterior import (
    AlternatingForm,
    DiffForm,
    TForm,
    VectorField,
    contract_left,
    contract_right,
    exterior_derivative,
    lift_T_representative,
    simplex,
    wedge,
)


def d(alpha: AlternatingForm) -> AlternatingForm:
    return exterior_derivative(alpha)


def ds_wedge(alpha: DiffForm) -> DiffForm:
    return wedge(simplex(alpha.n).ds, alpha)


def wedge_ds(alpha: DiffForm) -> DiffForm:
    return wedge(alpha, simplex(alpha.n).ds)


def i_X(alpha: DiffForm) -> DiffForm:
    return contract_left(simplex(alpha.n).X, alpha)


def j_X(alpha: DiffForm) -> DiffForm:
    return contract_right(simplex(alpha.n).X, alpha)


def i_grad_s(alpha: DiffForm) -> DiffForm:
    return contract_left(simplex(alpha.n).grad_s, alpha)


def lie_X(alpha: DiffForm) -> DiffForm:
    """Lie derivative along X via Cartan's formula."""
    return d(i_X(alpha)) + i_X(d(alpha))


def _total_degree(alpha: DiffForm) -> int:
    return alpha.homogeneous_degree() + alpha.degree


def bold_d(alpha: DiffForm) -> DiffForm:
    """Modified derivative ``d - s^-1 ds ^ L_X`` on a homogeneous form.

    Raises :class:`NotHomogeneous` for mixed-degree input.  The result may
    carry a negative power of s.
    """
    if not alpha:
        return DiffForm.zero(alpha.nvars, alpha.degree + 1)
    weight = _total_degree(alpha)
    correction = ds_wedge(alpha).mul_s(-1).multiply(weight)
    return d(alpha) - correction


def s_bold_d(alpha: DiffForm) -> DiffForm:
    """``s * bold_d(alpha)``, which stays polynomial on polynomial input."""
    if not alpha:
        return DiffForm.zero(alpha.nvars, alpha.degree + 1)
    weight = _total_degree(alpha)
    return d(alpha).mul_s(1) - ds_wedge(alpha).multiply(weight)


def koszul(alpha: AlternatingForm) -> AlternatingForm:
    """Contraction with the barycentric radial field X - s grad(s)/(n+1).

    On a :class:`TForm` the field is its restriction to T, with components
    ``x_i - 1/(n+1)``.
    """
    if isinstance(alpha, TForm):
        return contract_left(VectorField.koszul_on_T(alpha.nvars), alpha)
    return contract_left(simplex(alpha.n).X_kappa, alpha)


def split(alpha: DiffForm) -> tuple[DiffForm, DiffForm]:
    """Vertical/horizontal parts ``ds ^ i_X(alpha/s)`` and ``i_X(ds ^ alpha/s)``."""
    scaled = alpha.mul_s(-1)
    vertical = ds_wedge(i_X(scaled))
    horizontal = i_X(ds_wedge(scaled))
    return vertical, horizontal


def h_r(a: TForm, r: int) -> DiffForm:
    """Horizontal homogeneous degree-r extension of a form on T.

    Computed from the deterministic polynomial lift as
    ``s^-1 i_X(ds ^ lift)``; the result can carry negative powers of s.
    When ``a`` has coefficients of degree above ``r`` the lift is taken at
    that degree and then divided by the matching power of s.
    """
    if not a:
        return DiffForm.zero(a.nvars + 1, a.degree)
    top = max(r, a.max_coefficient_degree())
    lifted = lift_T_representative(a, top)
    return i_X(ds_wedge(lifted)).mul_s(r - top - 1)
