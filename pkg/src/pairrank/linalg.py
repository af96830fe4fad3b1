"""Exact solution of square rational linear systems.

Rows are scaled to integers, eliminated fraction-free (Bareiss: every
division is exact, entries stay integral), and back-substituted with
rationals.  Suitable for the desk-scale systems this package builds;
no iterative or floating-point fallback exists on purpose.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

__all__ = ["SingularMatrixError", "solve_linear_system"]


class SingularMatrixError(ValueError):
    """The coefficient matrix has no unique solution."""


def solve_linear_system(matrix: Sequence[Sequence], rhs: Sequence) -> tuple[Fraction, ...]:
    """Solve ``matrix @ x == rhs`` exactly for a nonsingular square matrix."""
    n = len(matrix)
    if n == 0:
        return ()
    if len(rhs) != n:
        raise ValueError(f"rhs has {len(rhs)} entries, expected {n}")

    # One integer augmented row per equation: scale by the lcm of denominators.
    aug: list[list[int]] = []
    for i in range(n):
        row = [Fraction(x) for x in matrix[i]]
        if len(row) != n:
            raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
        b = Fraction(rhs[i])
        scale = lcm(*(x.denominator for x in row), b.denominator)
        aug.append([int(x * scale) for x in row] + [int(b * scale)])

    prev = 1
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError(f"no pivot in column {col}")
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        for r in range(col + 1, n):
            factor = aug[r][col]
            row_r = aug[r]
            row_p = aug[col]
            # Bareiss update: exact division even when factor is zero.
            for c in range(col, n + 1):
                row_r[c] = (pivot * row_r[c] - factor * row_p[c]) // prev
        prev = pivot

    solution = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(aug[i][n])
        for c in range(i + 1, n):
            acc -= aug[i][c] * solution[c]
        solution[i] = acc / aug[i][i]
    return tuple(solution)
