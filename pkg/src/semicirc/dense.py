"""Plain dense matrices (lists of lists) over a :class:`~semicirc.ring.Ring`.

Deliberately naive: these are the reference side of every cross-check.
"""

from __future__ import annotations

from typing import Sequence

from .ring import Element, Ring

Matrix = list[list[Element]]


def identity(R: Ring, n: int) -> Matrix:
    return [[R.one if i == j else R.zero for j in range(n)] for i in range(n)]


def zeros(R: Ring, n: int) -> Matrix:
    return [[R.zero] * n for _ in range(n)]


def matmul(R: Ring, A: Sequence[Sequence[Element]], B: Sequence[Sequence[Element]]) -> Matrix:
    n, inner, cols = len(A), len(B), len(B[0]) if B else 0
    if any(len(row) != inner for row in A):
        raise ValueError("dimension mismatch")
    out = []
    for i in range(n):
        row = []
        for j in range(cols):
            s = R.zero
            for t in range(inner):
                s = R.add(s, R.multiply(A[i][t], B[t][j]))
            row.append(s)
        out.append(row)
    return out


def power_naive(R: Ring, M: Sequence[Sequence[Element]], k: int) -> Matrix:
    """``M^k`` by ``k - 1`` successive multiplications."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    result = identity(R, len(M))
    for _ in range(k):
        result = matmul(R, result, M)
    return result


def power_squaring(R: Ring, M: Sequence[Sequence[Element]], k: int) -> Matrix:
    """``M^k`` by repeated squaring."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    result = identity(R, len(M))
    base = [list(row) for row in M]
    while k:
        if k & 1:
            result = matmul(R, result, base)
        k >>= 1
        if k:
            base = matmul(R, base, base)
    return result


def equal(R: Ring, A: Sequence[Sequence[Element]], B: Sequence[Sequence[Element]]) -> bool:
    if len(A) != len(B):
        return False
    for ra, rb in zip(A, B):
        if len(ra) != len(rb) or not all(R.equals(x, y) for x, y in zip(ra, rb)):
            return False
    return True
