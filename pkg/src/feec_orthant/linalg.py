"""Exact linear algebra over the rationals on sparse vectors.

Vectors are dicts from hashable, mutually comparable keys to rationals.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .ratpoly import scalar


def _axpy(target: dict, factor, source: dict) -> None:
    # target -= factor * source, dropping zeros
    for key, v in source.items():
        w = target.get(key, 0) - factor * v
        if w:
            target[key] = w
        else:
            target.pop(key, None)


class Echelon:
    """Incrementally row-reduced set of sparse vectors.

    Every stored row remembers which inserted vectors it combines, so a
    dependent insertion yields an explicit linear relation.

    >>> e = Echelon()
    >>> e.add({0: 1, 1: 1}, "a"), e.add({0: 2, 1: 2}, "b")
    (True, False)
    >>> e.relations
    [{'b': 1, 'a': -2}]
    """

    def __init__(self):
        self._rows: list[tuple[object, dict, dict]] = []
        self.independent: list = []
        self.relations: list[dict] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, vec: dict, combo: dict | None = None) -> tuple[dict, dict]:
        v = {k: x for k, x in vec.items() if x}
        c = dict(combo) if combo else {}
        for pivot, row, row_combo in self._rows:
            f = v.get(pivot)
            if f is None:
                continue
            _axpy(v, f, row)
            _axpy(c, f, row_combo)
        return v, c

    def add(self, vec: dict, tag) -> bool:
        """Insert ``vec``; returns False and records a relation when dependent."""
        v, c = self.reduce(vec, {tag: 1})
        if not v:
            self.relations.append({k: scalar(x) for k, x in c.items()})
            return False
        pivot = min(v)
        f = scalar(Fraction(1) / v[pivot])
        if f != 1:
            v = {k: scalar(x * f) for k, x in v.items()}
            c = {k: scalar(x * f) for k, x in c.items()}
        self._rows.append((pivot, v, c))
        self.independent.append(tag)
        return True

    def solve(self, vec: dict) -> dict | None:
        """Express ``vec`` in the inserted independent vectors, or None."""
        v, c = self.reduce(vec)
        if v:
            return None
        return {k: scalar(-x) for k, x in c.items() if x}


def rank(vectors) -> int:
    e = Echelon()
    for i, v in enumerate(vectors):
        e.add(v, i)
    return e.rank


def kernel(vectors) -> list[dict]:
    """Basis of ``{c : sum_j c_j vectors[j] = 0}`` as dicts index -> coefficient."""
    e = Echelon()
    for i, v in enumerate(vectors):
        e.add(v, i)
    return e.relations


def rows_to_sparse(matrix) -> list[dict]:
    return [{j: x for j, x in enumerate(row) if x} for row in matrix]


def matrix_rank(matrix) -> int:
    return rank(rows_to_sparse(matrix))


def primitive(coeffs: dict) -> dict:
    """Scale rational coefficients to coprime integers with a positive leading entry."""
    if not coeffs:
        return {}
    den = lcm(*(Fraction(x).denominator for x in coeffs.values()))
    ints = {k: int(Fraction(x) * den) for k, x in coeffs.items()}
    g = 0
    for x in ints.values():
        g = gcd(g, x)
    lead = ints[min(ints)]
    if lead < 0:
        g = -g
    return {k: x // g for k, x in ints.items()}


def bareiss_determinant(matrix) -> Fraction:
    """Fraction-free elimination on a dense square matrix of rationals.

    Rows are first scaled to integers; all intermediate quantities are
    then exact integer minors.
    """
    size = len(matrix)
    if size == 0:
        return Fraction(1)
    if any(len(row) != size for row in matrix):
        raise ValueError("determinant needs a square matrix")
    scale = Fraction(1)
    a = []
    for row in matrix:
        den = lcm(*(Fraction(x).denominator for x in row))
        a.append([int(Fraction(x) * den) for x in row])
        scale /= den
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, size):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[-1][-1] * scale


def _permutation_sign(perm: list[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def determinant(matrix) -> Fraction:
    """Exact determinant, factoring the matrix into independent blocks first.

    Rows and columns are grouped into connected components of the nonzero
    pattern; the determinant is the product of Bareiss determinants of the
    diagonal blocks times the sign of the row and column reorderings.
    """
    size = len(matrix)
    if size == 0:
        return Fraction(1)
    if any(len(row) != size for row in matrix):
        raise ValueError("determinant needs a square matrix")
    parent = list(range(2 * size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, row in enumerate(matrix):
        for j, x in enumerate(row):
            if x:
                ri, cj = find(i), find(size + j)
                if ri != cj:
                    parent[ri] = cj
    groups: dict[int, tuple[list[int], list[int]]] = {}
    for i in range(size):
        groups.setdefault(find(i), ([], []))[0].append(i)
    for j in range(size):
        groups.setdefault(find(size + j), ([], []))[1].append(j)
    row_order, col_order = [], []
    result = Fraction(1)
    for rows, cols in groups.values():
        if len(rows) != len(cols):
            return Fraction(0)
        block = [[matrix[i][j] for j in cols] for i in rows]
        result *= bareiss_determinant(block)
        if not result:
            return Fraction(0)
        row_order.extend(rows)
        col_order.extend(cols)
    return result * _permutation_sign(row_order) * _permutation_sign(col_order)
