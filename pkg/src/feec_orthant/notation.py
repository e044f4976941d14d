"""Text and JSON notation for forms.

Grammar accepted by :func:`parse_form` (``/\\`` is the wedge, ``^`` is an
exponent)::

    form    := ['+'|'-'] term (('+'|'-') term)*
    term    := power (('*' | '/' | '/\\') power)*
    power   := atom ('^' nat)?
    atom    := int | var | 's' | 'd' var | 'ds' | '(' form ')'

Variables are ``x1 .. x9`` (1-based) with the aliases ``x, y, z, w`` when
there are at most four coordinates.  ``s`` and ``ds`` expand to the sums of
all coordinates and differentials.  Division is only by nonzero rationals
times powers of ``s``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import NamedTuple

from .errors import NotDivisible, ParseError, UnknownVariable
from .exterior import AlternatingForm, DiffForm, TForm, merge_sign
from .ratpoly import Polynomial, SLocalPoly, default_names, divide_by_s, scalar


# printing


def coordinate_names(form: AlternatingForm) -> tuple[str, ...]:
    if isinstance(form, TForm):
        return default_names(form.nvars + 1)[: form.nvars]
    return default_names(form.nvars)


def to_ds_basis(alpha: DiffForm) -> dict:
    """Coefficients in the basis dx_0, ..., dx_{n-1}, ds.

    The returned keys are index sets in which the index ``n`` stands for
    ``ds`` instead of ``dx_n``.
    """
    last = alpha.nvars - 1
    terms = alpha._terms
    out = {J: c for J, c in terms.items() if J and J[-1] == last}
    candidates = {J for J in terms if not J or J[-1] != last}
    for J in out:
        head = J[:-1]
        for i in range(last):
            if i not in head:
                candidates.add(merge_sign(head, (i,))[1])
    zero = SLocalPoly.coerce(0, alpha.nvars)
    for J in candidates:
        # c'_J = c_J - sum_i (-1)^#{j in J, j > i} c_{J - i + last}
        v = terms.get(J, zero)
        for pos in range(len(J)):
            pc = terms.get(J[:pos] + J[pos + 1 :] + (last,))
            if pc is None:
                continue
            v = v + pc if (len(J) - pos - 1) % 2 else v - pc
        if v:
            out[J] = v
    return out


def _coefficient_text(c, names) -> tuple[bool, str, bool]:
    """(negative, text, is_unit) for a coefficient, pulling out a sign when unambiguous."""
    if isinstance(c, SLocalPoly):
        num, m = c.numerator, c.s_power
    else:
        num, m = c, 0
    negative = False
    if len(num) == 1:
        (_, lead), = num._terms.items()
        if lead < 0:
            negative = True
            num = -num
    body = num.format(names)
    if m:
        den = "s" if m == 1 else f"s^{m}"
        if len(num) > 1:
            body = f"({body})"
        return negative, f"({body}/{den})", False
    if num == 1:
        return negative, "1", True
    if len(num) > 1:
        return negative, f"({body})", False
    return negative, body, False


def format_form(form: AlternatingForm, names=None, basis: str = "dx") -> str:
    """Render ``form`` in the grammar accepted by :func:`parse_form`.

    ``basis`` is ``"dx"``, ``"ds"`` (replace the last differential by ds) or
    ``"auto"`` (whichever needs fewer terms, preferring dx on ties).
    """
    if names is None:
        names = coordinate_names(form)
    terms = dict(form._terms)
    use_ds = False
    if isinstance(form, DiffForm) and basis != "dx" and form.degree > 0:
        alt = to_ds_basis(form)
        if basis == "ds" or len(alt) < len(terms):
            terms, use_ds = alt, True
    if not terms:
        return "0"
    cov_names = [f"d{nm}" for nm in names]
    if use_ds:
        cov_names[-1] = "ds"
    pieces = []
    for I in sorted(terms):
        c = terms[I]
        if not I:
            if isinstance(c, SLocalPoly) and c.s_power:
                negative, text, _ = _coefficient_text(c, names)
            else:
                poly = c.numerator if isinstance(c, SLocalPoly) else c
                negative, text = False, poly.format(names)
                if len(poly) > 1 and pieces:
                    text = f"({text})"
            pieces.append((negative, text))
            continue
        cov = "/\\".join(cov_names[i] for i in I)
        negative, text, unit = _coefficient_text(c, names)
        pieces.append((negative, cov if unit else f"{text}*{cov}"))
    out = []
    for i, (negative, text) in enumerate(pieces):
        if i == 0:
            out.append(f"-{text}" if negative else text)
        else:
            out.append(f" - {text}" if negative else f" + {text}")
    return "".join(out)


# parsing


class Token(NamedTuple):
    kind: str
    value: str
    pos: int


_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9]*)|(?P<op>/\\|[-+*/^()]))")


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad, text)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(Token("end", "", end))
    return tokens


class _Parser:
    def __init__(self, text: str, n: int, on_T: bool):
        self.text = text
        self.on_T = on_T
        self.nvars = n if on_T else n + 1
        self.cls = TForm if on_T else DiffForm
        self.tokens = tokenize(text)
        self.i = 0
        ambient = default_names(n + 1)
        self.names = {}
        for idx in range(self.nvars):
            self.names[f"x{idx + 1}"] = idx
        if n + 1 <= 4:
            for idx, nm in enumerate(ambient[: self.nvars]):
                self.names[nm] = idx
        self.ambient_count = n + 1

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(message, tok.pos, self.text)

    def expect(self, value: str) -> Token:
        tok = self.tok
        if tok.value != value:
            found = tok.value or "end of input"
            raise self.error(f"expected {value!r}, found {found!r}")
        self.i += 1
        return tok

    def parse(self) -> AlternatingForm:
        result = self.form()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.value!r}")
        return result

    def form(self) -> AlternatingForm:
        negate = False
        if self.tok.value in "+-" and self.tok.kind == "op":
            negate = self.tok.value == "-"
            self.i += 1
        result = self.term()
        if negate:
            result = -result
        while self.tok.kind == "op" and self.tok.value in ("+", "-"):
            op = self.tok
            self.i += 1
            rhs = self.term()
            try:
                result = result + rhs if op.value == "+" else result - rhs
            except ValueError as exc:
                raise self.error(str(exc), op) from None
        return result

    def term(self) -> AlternatingForm:
        result = self.power()
        while self.tok.kind == "op" and self.tok.value in ("*", "/", "/\\"):
            op = self.tok
            self.i += 1
            rhs = self.power()
            if op.value == "/":
                result = self.divide(result, rhs, op)
            else:
                result = result ^ rhs
        return result

    def divide(self, lhs: AlternatingForm, rhs: AlternatingForm, op: Token) -> AlternatingForm:
        if rhs.degree != 0 or not rhs:
            raise self.error("can only divide by a nonzero scalar", op)
        c = rhs.coefficient(())
        num = c.numerator if isinstance(c, SLocalPoly) else c
        m = c.s_power if isinstance(c, SLocalPoly) else 0
        j = 0
        while not num.is_constant():
            if self.on_T:
                raise self.error("can only divide by rationals on T", op)
            try:
                num = divide_by_s(num)
            except NotDivisible:
                raise self.error("can only divide by rationals times powers of s", op) from None
            j += 1
        value = Fraction(num.constant_term())
        if isinstance(lhs, DiffForm):
            lhs = lhs.mul_s(m - j)
        return lhs / value

    def power(self) -> AlternatingForm:
        base = self.atom()
        if self.tok.kind == "op" and self.tok.value == "^":
            op = self.tok
            self.i += 1
            if self.tok.kind != "num":
                raise self.error("expected a nonnegative integer exponent")
            e = int(self.tok.value)
            self.i += 1
            if base.degree != 0:
                raise self.error("only scalars can be raised to a power", op)
            result = self.cls.scalar(1, self.nvars)
            for _ in range(e):
                result = result ^ base
            return result
        return base

    def variable(self, name: str, tok: Token) -> int:
        if name in self.names:
            return self.names[name]
        raise UnknownVariable(f"unknown variable {name!r}", tok.pos, self.text)

    def atom(self) -> AlternatingForm:
        tok = self.tok
        if tok.kind == "num":
            self.i += 1
            return self.cls.scalar(int(tok.value), self.nvars)
        if tok.kind == "op" and tok.value == "(":
            self.i += 1
            inner = self.form()
            self.expect(")")
            return inner
        if tok.kind == "ident":
            self.i += 1
            name = tok.value
            if name == "s":
                if self.on_T:
                    raise UnknownVariable("s is not available on T (it equals 1)", tok.pos, self.text)
                return DiffForm.scalar(Polynomial.s(self.nvars), self.nvars)
            if name == "ds":
                if self.on_T:
                    raise UnknownVariable("ds is not available on T (it vanishes)", tok.pos, self.text)
                return DiffForm.ds(self.nvars)
            if name in self.names:
                return self.cls.scalar(Polynomial.variable(self.nvars, self.names[name]), self.nvars)
            if name.startswith("d") and len(name) > 1:
                return self.cls.dx(self.nvars, self.variable(name[1:], tok))
            raise UnknownVariable(f"unknown variable {name!r}", tok.pos, self.text)
        found = tok.value or "end of input"
        raise self.error(f"unexpected {found!r}")


def parse_form(text: str, n: int, on_T: bool = False) -> AlternatingForm:
    """Parse ``text`` as a form on the (n+1)-orthant, or on T when ``on_T``."""
    return _Parser(text, n, on_T).parse()


# JSON


def form_to_json(form: AlternatingForm) -> dict:
    """Lossless JSON-ready dict; rationals are strings and indices are 1-based."""
    out = {
        "domain": "T" if isinstance(form, TForm) else "orthant",
        "nvars": form.nvars,
        "degree": form.degree,
    }
    if isinstance(form, DiffForm) and form:
        try:
            out["homogeneity"] = form.homogeneous_degree()
        except ValueError:
            pass
    terms = []
    for I, c in form.sorted_terms():
        num = c.numerator if isinstance(c, SLocalPoly) else c
        m = c.s_power if isinstance(c, SLocalPoly) else 0
        for mono, v in num.sorted_terms():
            terms.append(
                {
                    "coeff": str(v),
                    "s_power": m,
                    "monomial": list(mono),
                    "indices": [i + 1 for i in I],
                }
            )
    out["terms"] = terms
    return out


def form_from_json(data: dict) -> AlternatingForm:
    nv = int(data["nvars"])
    cls = TForm if data.get("domain") == "T" else DiffForm
    degree = int(data["degree"])
    grouped: dict[tuple, dict[int, dict]] = {}
    for t in data["terms"]:
        I = tuple(i - 1 for i in t["indices"])
        m = int(t.get("s_power", 0))
        grouped.setdefault(I, {}).setdefault(m, {})[tuple(t["monomial"])] = scalar(Fraction(t["coeff"]))
    terms = {}
    for I, by_power in grouped.items():
        total = None
        for m, monos in by_power.items():
            poly = Polynomial(nv, monos)
            value = SLocalPoly(poly, m) if cls is DiffForm else poly
            total = value if total is None else total + value
        terms[I] = total
    return cls(nv, degree, terms)
