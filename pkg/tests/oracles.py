"""Independent reference computations used by the tests.

Nothing here imports the package: polynomials are plain dicts from exponent
tuples to Fractions, and integrals over simplices are done one variable at
a time with the fundamental theorem of calculus.
"""

from __future__ import annotations

from fractions import Fraction


def _mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for a, u in p.items():
        for b, v in q.items():
            key = tuple(x + y for x, y in zip(a, b))
            out[key] = out.get(key, 0) + u * v
    return {k: v for k, v in out.items() if v}


def _pow(p: dict, e: int, nvars: int) -> dict:
    out = {(0,) * nvars: Fraction(1)}
    for _ in range(e):
        out = _mul(out, p)
    return out


def integrate_last(poly: dict, nvars: int) -> dict:
    """Integrate over x_last from 0 to 1 - (x_0 + ... + x_{last-1}).

    The result is a polynomial in the remaining variables, still indexed by
    full-length exponent tuples with a zero in the last slot.
    """
    last = nvars - 1
    upper = {(0,) * nvars: Fraction(1)}
    for j in range(last):
        mono = [0] * nvars
        mono[j] = 1
        upper[tuple(mono)] = Fraction(-1)
    out: dict = {}
    for mono, c in poly.items():
        e = mono[last]
        rest = {mono[:last] + (0,): Fraction(c, e + 1)}
        for key, v in _mul(rest, _pow(upper, e + 1, nvars)).items():
            out[key] = out.get(key, 0) + v
    return {k: v for k, v in out.items() if v}


def integrate_over_simplex(poly: dict, nvars: int) -> Fraction:
    """Integral of ``poly`` over ``{x >= 0, sum(x) <= 1}`` in ``nvars`` dimensions."""
    current = dict(poly)
    for m in range(nvars, 0, -1):
        # integrate the highest remaining variable, then forget it
        current = integrate_last({k[:m]: v for k, v in current.items()}, m)
        current = {k[: m - 1]: v for k, v in current.items()}
    return sum(current.values(), Fraction(0))


def solid_moment(exponents) -> Fraction:
    exponents = tuple(exponents)
    return integrate_over_simplex({exponents: Fraction(1)}, len(exponents))


def integrate_on_T(top_coefficient: dict, n: int) -> Fraction:
    """Integral over T of ``c dx_0 ^ ... ^ dx_{n-1}`` in the graph coordinates.

    T is oriented as the outer boundary face of the solid simplex.  In the
    coordinates ``(x_0, ..., x_{n-1}) -> (x_0, ..., x_{n-1}, 1 - sum)`` that
    orientation differs from the standard one by ``(-1)^n``.
    """
    if n == 0:
        value = top_coefficient.get((), 0)
        return Fraction(value)
    sign = -1 if n % 2 else 1
    return sign * integrate_over_simplex(top_coefficient, n)


def determinant_by_expansion(matrix) -> Fraction:
    """Laplace expansion along the first row; fine for tiny matrices."""
    size = len(matrix)
    if size == 0:
        return Fraction(1)
    if size == 1:
        return Fraction(matrix[0][0])
    total = Fraction(0)
    for j, a in enumerate(matrix[0]):
        if not a:
            continue
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        total += (-1) ** j * Fraction(a) * determinant_by_expansion(minor)
    return total
