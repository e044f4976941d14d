"""Deterministic property suite run by ``feec verify``.

Each cell ``(r, k)`` exercises the operator identities on the monomial
basis of ``H_r^k`` and, where the parameters allow, the structure of the
P and Pminus spaces, the correspondence with T and the duality pairings.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import comb
from typing import Callable, Iterator

from .calculus import bold_d, d, ds_wedge, i_X, i_grad_s, j_X, lie_X, s_bold_d, split, wedge_ds
from .exterior import DiffForm, pullback_face, simplex
from .metric import hodge_star_g, inner_g
from .pairing import verify_duality, verify_h_duality
from .spaces import basis_H, basis_P, basis_Pminus, from_T, ring_subspace, to_T


@dataclass(frozen=True)
class CheckResult:
    name: str
    n: int
    r: int
    k: int
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name:<22} n={self.n} r={self.r} k={self.k}"
        return f"{text}  {self.detail}" if self.detail else text


def _all(forms, predicate: Callable[[DiffForm], bool]) -> tuple[bool, str]:
    count = 0
    for f in forms:
        if not predicate(f):
            return False, f"fails on {f}"
        count += 1
    return True, f"{count} form(s)"


def _probe(n: int, r: int, k: int) -> DiffForm:
    # a dense deterministic element of H_r^k used as the second argument of bilinear checks
    total = DiffForm.zero(n + 1, k)
    for j, b in enumerate(basis_H(n, r, k)):
        total = total + b.multiply(j % 5 - 2 or 3)
    return total


def _operator_checks(n: int, r: int, k: int) -> Iterator[tuple[str, bool, str]]:
    ctx = simplex(n)
    H = basis_H(n, r, k).basis
    s = ctx.s
    yield ("ds-ix-anticommutator", *_all(H, lambda b: ds_wedge(i_X(b)) + i_X(ds_wedge(b)) == b.multiply(s)))
    yield ("ds-grad-anticommutator", *_all(H, lambda b: ds_wedge(i_grad_s(b)) + i_grad_s(ds_wedge(b)) == b.multiply(n + 1)))
    yield ("euler", *_all(H, lambda b: lie_X(b) == b.multiply(r + k)))
    yield ("d-squared", *_all(H, lambda b: not d(d(b))))
    yield ("bold-d-squared", *_all(H, lambda b: not bold_d(bold_d(b))))

    def split_ok(b):
        v, h = split(b)
        return v + h == b and not inner_g(v, h)

    yield ("split", *_all(H, split_ok))
    sign = -1 if (k * (n + 1 - k)) % 2 else 1
    yield ("star-star", *_all(H, lambda b: hodge_star_g(hodge_star_g(b)) == b.multiply(ctx.p).multiply(sign)))
    if k <= n:
        probe = _probe(n, r, k + 1)
        yield ("ds-ix-adjoint", *_all(H, lambda b: inner_g(ds_wedge(b), probe) == inner_g(b, i_X(probe))))


def _space_checks(n: int, r: int, k: int) -> Iterator[tuple[str, bool, str]]:
    if k > n:
        return
    P = basis_P(n, r, k)
    yield ("P-vertical", *_all(P, lambda a: not ds_wedge(a)))
    expected = comb(r + k, k) * comb(n + r, n - k)
    yield ("P-dimension", P.dim == expected, f"{P.dim} (closed form {expected})")
    ring = ring_subspace(P)
    yield ("ringP-trace", *_all(ring, lambda a: all(not pullback_face(a, i) for i in range(n + 1))))
    if r >= 1:
        M = basis_Pminus(n, r, k)
        yield ("Pminus-horizontal", *_all(M, lambda a: not i_X(a)))
        expected = comb(r + k - 1, k) * comb(n + r, n - k)
        yield ("Pminus-dimension", M.dim == expected, f"{M.dim} (closed form {expected})")
        ring = ring_subspace(M)
        yield ("ringPminus-trace", *_all(ring, lambda a: all(not pullback_face(a, i) for i in range(n + 1))))
        lower = basis_P(n, r - 1, k)

        def chain_ok(a):
            middle = j_X(a)
            return middle in M and wedge_ds(middle) in P and wedge_ds(middle) == a.multiply(simplex(n).s)

        yield ("inclusion-chain", *_all(lower, chain_ok))
        yield ("P-roundtrip", *_all(P, lambda a: from_T(to_T(a, "P"), "P", r) == a))
        yield ("Pminus-roundtrip", *_all(M, lambda a: from_T(to_T(a, "Pminus"), "Pminus", r) == a))
        if k < n:
            target = basis_P(n, r - 1, k + 1)

            def bold_d_diagram(a):
                image = bold_d(a)
                return image in target and to_T(image, "P") == d(to_T(a, "P"))

            yield ("bold-d-diagram", *_all(P, bold_d_diagram))
            target_minus = basis_Pminus(n, r, k + 1)

            def s_bold_d_diagram(a):
                image = s_bold_d(a)
                return image in target_minus and to_T(image, "Pminus") == d(to_T(a, "Pminus"))

            yield ("s-bold-d-diagram", *_all(M, s_bold_d_diagram))


def _duality_checks(n: int, r: int, k: int) -> Iterator[tuple[str, bool, str]]:
    if r < 1 or k > n:
        return
    for report in (verify_duality(n, r, k), verify_h_duality(n, r, k)):
        for c in report.checks:
            detail = f"{c.shape[0]}x{c.shape[1]} rank {c.rank}"
            yield (f"duality {c.name}", c.passed, detail)


def cells(n: int, max_r: int) -> list[tuple[int, int]]:
    return [(r, k) for r in range(max_r + 1) for k in range(n + 2)]


def max_cells_from_env() -> int | None:
    raw = os.environ.get("FEEC_MAX_CELLS")
    if not raw:
        return None
    value = int(raw)
    if value < 0:
        raise ValueError("FEEC_MAX_CELLS must be nonnegative")
    return value


def run_suite(n: int, max_r: int, max_cells: int | None = None) -> Iterator[CheckResult]:
    """Yield one result per (check, cell); ``max_cells`` truncates the grid."""
    if n < 0 or max_r < 0:
        raise ValueError("n and max_r must be nonnegative")
    grid = cells(n, max_r)
    if max_cells is not None:
        grid = grid[:max_cells]
    for r, k in grid:
        for source in (_operator_checks, _space_checks, _duality_checks):
            for name, passed, detail in source(n, r, k):
                yield CheckResult(name, n, r, k, passed, detail)
