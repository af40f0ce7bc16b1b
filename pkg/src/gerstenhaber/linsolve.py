"""Exact linear algebra over the rationals.

Plain Gauss-Jordan elimination on Fraction matrices.  The particular
solution pins every free variable to zero, which makes the solver a
deterministic function of its input; callers rely on that for reproducible
output.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence


def rref(matrix: list[list[Fraction]]) -> list[int]:
    """Reduce ``matrix`` in place to reduced row echelon form.

    Returns the list of pivot column indices.  Rows may be shorter than the
    widest row only if the caller guarantees a rectangular input; no checks.
    """
    if not matrix:
        return []
    rows = len(matrix)
    cols = len(matrix[0])
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if matrix[i][c]), None)
        if pivot_row is None:
            continue
        matrix[r], matrix[pivot_row] = matrix[pivot_row], matrix[r]
        inv = 1 / matrix[r][c]
        matrix[r] = [v * inv for v in matrix[r]]
        for i in range(rows):
            if i != r and matrix[i][c]:
                factor = matrix[i][c]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def solve_particular(
    matrix: Sequence[Sequence], rhs: Sequence
) -> Optional[list[Fraction]]:
    """Solve ``matrix @ x = rhs`` exactly; None when inconsistent.

    Returns the reduced-echelon particular solution with all free variables
    set to zero.
    """
    rows = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    if len(rows) != len(matrix) or len(rows) != len(rhs):
        raise ValueError("matrix and right-hand side sizes differ")
    if not rows:
        return []
    n_cols = len(matrix[0])
    pivots = rref(rows)
    if n_cols in pivots:
        return None  # pivot in the augmented column: inconsistent
    solution = [Fraction(0)] * n_cols
    for r, c in enumerate(pivots):
        solution[c] = rows[r][n_cols]
    return solution


def solve_unique(matrix: Sequence[Sequence], rhs: Sequence) -> Optional[list[Fraction]]:
    """Solve ``matrix @ x = rhs`` when the solution is unique; else None."""
    if not matrix:
        return None
    rows = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    n_cols = len(matrix[0])
    pivots = rref(rows)
    if n_cols in pivots or len(pivots) != n_cols:
        return None
    return [rows[r][n_cols] for r in range(n_cols)]
