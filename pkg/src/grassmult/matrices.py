"""Dense exact integer matrices, two determinant algorithms, and the
binomial-coefficient matrix builders used by the multiplicity formulas.

A matrix is a plain list of row lists of ints. determinant_bareiss is the
production routine (fraction-free elimination; intermediate divisions are
always exact and entry growth stays polynomial); determinant_cofactor is
an independent cross-check kept deliberately naive, and is guarded to
small orders because its cost is factorial.
"""

from __future__ import annotations

from collections.abc import Sequence

from .arith import binom, exact_div

__all__ = [
    "Matrix",
    "determinant_bareiss",
    "determinant_cofactor",
    "build_binomial_matrix",
    "build_shifted_vandermonde_matrix",
    "vandermonde",
]

Matrix = list[list[int]]

COFACTOR_MAX_ORDER = 10


def _require_square(rows: Sequence[Sequence[int]]) -> int:
    order = len(rows)
    if order == 0:
        raise ValueError("matrix order must be >= 1")
    for r, row in enumerate(rows):
        if len(row) != order:
            raise ValueError(f"row {r} has {len(row)} entries, expected {order}")
    return order


def determinant_bareiss(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss fraction-free elimination.

    On a zero pivot the first lower row with a nonzero entry in the pivot
    column is swapped in (sign tracked); if no such row exists the
    determinant is zero. Each elimination step divides by the previous
    pivot, which the Bareiss identity guarantees to be exact; a remainder
    would mean corrupted arithmetic and raises InexactDivisionError.
    """
    order = _require_square(rows)
    a = [list(row) for row in rows]
    sign = 1
    prev = 1
    for k in range(order - 1):
        if a[k][k] == 0:
            for r in range(k + 1, order):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for p in range(k + 1, order):
            row_p = a[p]
            lead = row_p[k]
            for q in range(k + 1, order):
                num = row_p[q] * pivot - lead * row_k[q]
                row_p[q] = num if prev == 1 else exact_div(num, prev)
            row_p[k] = 0
        prev = pivot
    return sign * a[order - 1][order - 1]


def determinant_cofactor(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant by recursive cofactor expansion (test oracle).

    Guarded to order <= 10; the cost is factorial beyond that.
    """
    order = _require_square(rows)
    if order > COFACTOR_MAX_ORDER:
        raise ValueError(
            f"cofactor expansion guarded to order <= {COFACTOR_MAX_ORDER}, got {order}"
        )
    return _cofactor([list(row) for row in rows])


def _cofactor(a: Matrix) -> int:
    order = len(a)
    if order == 1:
        return a[0][0]
    if order == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = 0
    rest = a[1:]
    for col, lead in enumerate(a[0]):
        if lead == 0:
            continue
        minor = [row[:col] + row[col + 1 :] for row in rest]
        term = lead * _cofactor(minor)
        total += -term if col % 2 else term
    return total


def build_binomial_matrix(values: Sequence[int], shifts: Sequence[int]) -> Matrix:
    """Matrix whose column q holds binom(values[q], p - shifts[q]) for rows
    p = 0..d-1; the carrier of the determinant route for multiplicities."""
    d = len(values)
    if d != len(shifts):
        raise ValueError(
            f"values and shifts must have equal length, got {d} and {len(shifts)}"
        )
    if d == 0:
        raise ValueError("need at least one column")
    for q, s in enumerate(shifts):
        if s < 0:
            raise ValueError(f"shifts must be nonnegative, got {s} at position {q + 1}")
    return [[binom(values[q], p - shifts[q]) for q in range(d)] for p in range(d)]


def build_shifted_vandermonde_matrix(
    values: Sequence[int], offsets: Sequence[int]
) -> Matrix:
    """Matrix with entry (p, q) = binom(values[q] + offsets[q], p) for rows
    p = 0..d-1; its determinant times 1! 2! ... (d-1)! equals the
    Vandermonde product of the shifted values."""
    d = len(values)
    if d != len(offsets):
        raise ValueError(
            f"values and offsets must have equal length, got {d} and {len(offsets)}"
        )
    if d == 0:
        raise ValueError("need at least one column")
    for q, k in enumerate(offsets):
        if k < 0:
            raise ValueError(f"offsets must be nonnegative, got {k} at position {q + 1}")
    shifted = [v + k for v, k in zip(values, offsets)]
    return [[binom(c, p) for c in shifted] for p in range(d)]


def vandermonde(values: Sequence[int]) -> int:
    """Product of pairwise differences values[p] - values[q] over p > q,
    computed directly as a product (never via a determinant); 1 on empty
    input, 0 as soon as two entries coincide."""
    vs = list(values)
    out = 1
    for p in range(1, len(vs)):
        vp = vs[p]
        for q in range(p):
            diff = vp - vs[q]
            if diff == 0:
                return 0
            out *= diff
    return out
