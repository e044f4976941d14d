import json
import random

import pytest
from hypothesis import given, strategies as st

from feec_orthant import DiffForm, TForm, h_r, parse_form
from feec_orthant.errors import ParseError, UnknownVariable
from feec_orthant.notation import form_from_json, form_to_json, format_form, tokenize, to_ds_basis
from feec_orthant.ratpoly import Polynomial
from randforms import forms, random_tform


def test_parse_pminus_generator():
    a = parse_form("y*dx - x*dy", 2)
    assert a.degree == 1
    assert dict(a.terms) == {(0,): a.coefficient((0,)), (1,): a.coefficient((1,))}
    assert format_form(a) == "y*dx - x*dy"


def test_parse_matches_extension():
    text = "x*dy/\\dz + y*dz/\\dx + z*dx/\\dy"
    assert parse_form(text, 2) == h_r(parse_form("dx/\\dy", 2, on_T=True), 1)


def test_repeated_covector_is_zero():
    assert not parse_form("dx /\\ dx", 2)


def test_indexed_variables_and_aliases_agree():
    assert parse_form("x1*dx2", 2) == parse_form("x*dy", 2)
    assert parse_form("x5*dx1", 4).nvars == 5


def test_builtins_expand():
    assert parse_form("s", 2) == parse_form("x + y + z", 2)
    assert parse_form("ds", 2) == parse_form("dx + dy + dz", 2)


def test_rational_coefficients_and_powers():
    a = parse_form("1/2*x^2*dy - 3/4*dz", 2)
    assert format_form(a) == "1/2*x^2*dy - 3/4*dz"


def test_division_by_powers_of_s():
    a = parse_form("x*y/s*ds", 2)
    assert a.coefficient((0,)).s_power == 1
    assert parse_form("(x^2 + x*y + x*z)/s", 2) == parse_form("x", 2)
    assert parse_form("x/(2*s^2)", 2) == parse_form("1/2*x/s^2", 2)


@pytest.mark.parametrize(
    "text, position",
    [("y*dq", 2), ("y*(dx", 5), ("x + + y", 4), ("x $ y", 2), ("x/y", 1), ("dx^2", 2)],
)
def test_parse_errors_carry_positions(text, position):
    with pytest.raises(ParseError) as info:
        parse_form(text, 2)
    assert info.value.position == position
    assert info.value.caret().splitlines()[1].index("^") == position


def test_unknown_variable_is_a_parse_error():
    with pytest.raises(UnknownVariable):
        parse_form("w", 2)
    with pytest.raises(UnknownVariable):
        parse_form("z*dx", 2, on_T=True)
    with pytest.raises(UnknownVariable):
        parse_form("ds", 2, on_T=True)


def test_tokenizer():
    kinds = [t.kind for t in tokenize("3*x^2/\\dy")]
    assert kinds == ["num", "op", "ident", "op", "num", "op", "ident", "end"]


def test_printing_of_s_localized_terms():
    assert format_form(parse_form("y*dx - x*y/s*ds", 2), basis="auto") == "y*dx - (x*y/s)*ds"
    assert format_form(parse_form("(y^2 + y*z)/s*dx", 2)) == "((y^2 + y*z)/s)*dx"


def test_ds_basis_rewrites_last_differential():
    a = parse_form("dx - x/s*ds", 2)
    assert format_form(a, basis="dx") == "((y + z)/s)*dx - (x/s)*dy - (x/s)*dz"
    assert format_form(a, basis="ds") == "dx - (x/s)*ds"
    assert len(to_ds_basis(a)) == 2


def test_zero_prints_as_zero():
    assert format_form(DiffForm.zero(3, 1)) == "0"


def _roundtrip(form, n, on_T=False):
    for basis in ("dx", "ds", "auto"):
        text = format_form(form, basis=basis)
        assert parse_form(text, n, on_T=on_T) == form, text


@given(forms())
def test_parse_print_roundtrip(form):
    _roundtrip(form, form.nvars - 1)


@given(forms(max_r=2), st.integers(-2, 2))
def test_parse_print_roundtrip_with_s_powers(form, m):
    _roundtrip(form.mul_s(m), form.nvars - 1)


@given(st.integers(0, 2**32 - 1))
def test_parse_print_roundtrip_on_T(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    a = random_tform(rng, n, 3, rng.randint(0, n))
    _roundtrip(a, n, on_T=True)


@given(forms(), st.integers(-2, 2))
def test_json_roundtrip(form, m):
    form = form.mul_s(m)
    data = json.loads(json.dumps(form_to_json(form)))
    assert form_from_json(data) == form


def test_json_schema():
    data = form_to_json(parse_form("-1/2*x*y/s*ds", 2))
    assert data["degree"] == 1 and data["homogeneity"] == 1
    assert {"coeff", "s_power", "monomial", "indices"} <= set(data["terms"][0])
    assert all(isinstance(t["coeff"], str) for t in data["terms"])
    assert form_from_json(form_to_json(TForm(2, 1, {(0,): Polynomial.variable(2, 1)}))) == parse_form("y*dx", 2, on_T=True)
