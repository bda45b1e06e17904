"""Finite semicirculant (upper-triangular Toeplitz) matrices and their powers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import dense
from .formal import build_sequence
from .ring import Element, Ring


@dataclass(frozen=True)
class SemicirculantSpec:
    """The matrix whose entry ``(i, j)`` is ``row[j - i]`` for ``j >= i``, else zero."""

    ring: Ring
    row: tuple[Element, ...]

    def __post_init__(self):
        object.__setattr__(self, "row", tuple(self.row))
        if not self.row:
            raise ValueError("a semicirculant matrix needs order >= 1")

    @classmethod
    def from_integers(cls, R: Ring, values: Sequence[int], order: Optional[int] = None):
        """Map ``values`` into ``R`` and zero-pad to ``order``."""
        order = len(values) if order is None else order
        if order < len(values):
            raise ValueError(f"order {order} is shorter than the row ({len(values)} entries)")
        row = [R.from_integer(v) for v in values] + [R.zero] * (order - len(values))
        return cls(R, tuple(row))

    @property
    def order(self) -> int:
        return len(self.row)

    def to_dense(self) -> dense.Matrix:
        R, n = self.ring, self.order
        return [[self.row[j - i] if j >= i else R.zero for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class PowerResult:
    row: tuple[Element, ...]
    k: int


def _identity_row(R: Ring, n: int) -> tuple[Element, ...]:
    return (R.one,) + (R.zero,) * (n - 1)


def from_dense(M: Sequence[Sequence[Element]]) -> tuple[Element, ...]:
    return tuple(M[0])


def power(spec: SemicirculantSpec, k: int) -> PowerResult:
    """First row of ``A^k`` via the division-free formal recursion."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    R = spec.ring
    if k == 0:
        return PowerResult(_identity_row(R, spec.order), 0)
    seq = build_sequence(R, spec.row[0], spec.row[1:], spec.order - 1)
    return PowerResult(tuple(seq.evaluate(k)), k)


def naive_power(spec: SemicirculantSpec, k: int) -> PowerResult:
    """First row of ``A^k`` by dense repeated multiplication."""
    M = dense.power_naive(spec.ring, spec.to_dense(), k)
    return PowerResult(from_dense(M), k)


def leading_zeros(spec: SemicirculantSpec) -> int:
    R = spec.ring
    p = 0
    while p < spec.order and R.is_zero(spec.row[p]):
        p += 1
    return p


def shifted_power(spec: SemicirculantSpec, k: int, p: Optional[int] = None) -> PowerResult:
    """Power a row of the form ``[0, ..., 0, a_p, a_{p+1}, ...]`` through its left shift.

    Entry ``m`` of ``[a_p, a_{p+1}, ...]^k`` lands at position ``m + k*p``.
    ``p`` defaults to the number of leading zeros.  An all-zero row gives the
    identity for ``k = 0`` and the zero row otherwise.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    R, N = spec.ring, spec.order
    zeros_found = leading_zeros(spec)
    if p is None:
        if zeros_found == N:
            row = _identity_row(R, N) if k == 0 else (R.zero,) * N
            return PowerResult(row, k)
        p = zeros_found
    elif not 0 <= p < N:
        raise ValueError(f"shift p must satisfy 0 <= p < order={N}, got {p}")
    elif p > zeros_found:
        raise ValueError(f"row has only {zeros_found} leading zeros, cannot shift by {p}")

    if k == 0:
        return PowerResult(_identity_row(R, N), 0)
    offset = k * p
    out = [R.zero] * N
    if offset >= N:
        return PowerResult(tuple(out), k)
    # entries of D^k past N - 1 - offset never land inside the row
    shifted = SemicirculantSpec(R, spec.row[p:p + N - offset])
    for m, value in enumerate(power(shifted, k).row):
        out[m + offset] = value
    return PowerResult(tuple(out), k)


def division_recursion_power(spec: SemicirculantSpec, k: int) -> Optional[PowerResult]:
    """Classical power-series recursion, which divides by ``m * a_0``.

    Returns None unless ``a_0`` and every index ``1..N-1`` are units in the ring.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    R, a = spec.ring, spec.row
    inv_a0 = R.try_invert(a[0])
    if inv_a0 is None:
        return None
    inv_index = [None]
    for m in range(1, spec.order):
        inv_m = R.try_invert(R.from_integer(m))
        if inv_m is None:
            return None
        inv_index.append(inv_m)

    b = [R.pow(a[0], k)]
    for m in range(1, spec.order):
        s = R.zero
        for i in range(1, m + 1):
            term = R.multiply(a[i], b[m - i])
            s = R.add(s, R.scale(i * k - m + i, term))
        b.append(R.multiply(R.multiply(inv_index[m], inv_a0), s))
    return PowerResult(tuple(b), k)
