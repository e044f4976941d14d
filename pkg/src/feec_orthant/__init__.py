"""Exact symbolic computation with homogeneous polynomial differential forms.

Forms live on the closed first orthant of R^{n+1}; the simplex ``T`` is the
slice ``s = 1`` where ``s`` is the coordinate sum.
"""

from .calculus import (
    bold_d,
    d,
    ds_wedge,
    h_r,
    i_X,
    i_grad_s,
    j_X,
    koszul,
    lie_X,
    s_bold_d,
    split,
    wedge_ds,
)
from .errors import (
    DegreeMismatch,
    DegreeTooHigh,
    DimensionMismatch,
    ExcludedParameter,
    FeecError,
    NotDivisible,
    NotHomogeneous,
    NotInRange,
    NotPolynomial,
    NotPolynomialResult,
    ParseError,
    UnknownVariable,
    ZeroPolynomial,
)
from .exterior import (
    DiffForm,
    TForm,
    VectorField,
    contract_left,
    contract_right,
    exterior_derivative,
    lift_T_representative,
    pullback_face,
    restrict_to_T,
    simplex,
    trace_on_T_face,
    wedge,
)
from .metric import hodge_star_g, hodge_star_g_inverse, inner_g
from .notation import form_from_json, form_to_json, format_form, parse_form
from .pairing import (
    PairingMatrix,
    integrate_monomial_Tbold,
    integrate_Tbold,
    pair_T,
    pairing_matrix,
    verify_duality,
    verify_h_duality,
)
from .ratpoly import Polynomial, SLocalPoly, divide_by_s, homogeneous_degree, homogenize
from .spaces import (
    FormSpace,
    basis_H,
    basis_P,
    basis_Pminus,
    form_space,
    from_T,
    member,
    ring_subspace,
    to_T,
)

__version__ = "0.1.0"
