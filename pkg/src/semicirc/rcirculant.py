"""r-circulant matrices ``circ_{n,r}(c_0, ..., c_{n-1})`` and their powers.

The k-th power is read off the k-th power of the semicirculant matrix
``[c_0, ..., c_{n-1}, 0, 0, ...]``: entry ``m`` of that row is weighted by
``r^(m // n)`` and added into strip ``m mod n``.  Since ``[c_0, ...]^k`` has
no nonzero entry past ``(n-1)k``, a finite row of that length is enough.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from . import dense
from .ring import Element, Ring
from .semicirculant import SemicirculantSpec, power


@dataclass(frozen=True)
class RCirculant:
    ring: Ring
    r: Element
    row: tuple[Element, ...]

    def __post_init__(self):
        object.__setattr__(self, "row", tuple(self.row))
        if not self.row:
            raise ValueError("an r-circulant matrix needs order >= 1")

    @classmethod
    def from_integers(cls, R: Ring, values: Sequence[int], r: int) -> "RCirculant":
        return cls(R, R.from_integer(r), tuple(R.from_integer(v) for v in values))

    @property
    def n(self) -> int:
        return len(self.row)

    def to_dense(self) -> dense.Matrix:
        return to_dense(self)

    def format(self) -> str:
        R = self.ring
        values = ",".join(R.format(c) for c in self.row)
        return f"circ_{{{self.n},{R.format(self.r)}}}({values})"


def to_dense(C: RCirculant) -> dense.Matrix:
    R, n, c = C.ring, C.n, C.row
    return [
        [c[j - i] if j >= i else R.multiply(C.r, c[n + j - i]) for j in range(n)]
        for i in range(n)
    ]


def from_dense(R: Ring, M: Sequence[Sequence[Element]], r: Element) -> RCirculant:
    """Recover the r-circulant whose dense form is ``M``; ValueError if there is none."""
    C = RCirculant(R, r, tuple(M[0]))
    if not dense.equal(R, to_dense(C), M):
        raise ValueError(f"matrix is not {R.format(r)}-circulant")
    return C


def identity(R: Ring, n: int, r: Element) -> RCirculant:
    return RCirculant(R, r, (R.one,) + (R.zero,) * (n - 1))


def basic_permutation(R: Ring, n: int, r: Element) -> RCirculant:
    """``E_{n,r}``, the companion matrix of ``X^n - r``.

    For ``n = 1`` that is the 1x1 matrix ``[r]``.
    """
    if n == 1:
        return RCirculant(R, r, (r,))
    return RCirculant(R, r, (R.zero, R.one) + (R.zero,) * (n - 2))


def basic_permutation_power(R: Ring, n: int, r: Element, k: int) -> RCirculant:
    """``E_{n,r}^k = r^(k // n) E_{n,r}^(k mod n)``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    row = [R.zero] * n
    row[k % n] = R.pow(r, k // n)
    return RCirculant(R, r, tuple(row))


def semicirculant_power_row(C: RCirculant, k: int) -> tuple[Element, ...]:
    """Entries ``0..(n-1)k`` of ``[c_0, ..., c_{n-1}, 0, ...]^k``."""
    R = C.ring
    if k == 0:
        return (R.one,)
    order = (C.n - 1) * k + 1
    spec = SemicirculantSpec(R, C.row + (R.zero,) * (order - C.n))
    return power(spec, k).row


def fold(R: Ring, n: int, r: Element, entries: Sequence[Element]) -> tuple[Element, ...]:
    """Strip ``p`` is ``sum(entries[m] * r^(m // n) for m = p mod n)``."""
    strips = [R.zero] * n
    weight = R.one
    for start in range(0, len(entries), n):
        for m in range(start, min(start + n, len(entries))):
            strips[m - start] = R.add(strips[m - start], R.multiply(entries[m], weight))
        weight = R.multiply(weight, r)
    return tuple(strips)


def power_via_fold(C: RCirculant, k: int) -> RCirculant:
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    R = C.ring
    entries = semicirculant_power_row(C, k)
    return RCirculant(R, C.r, fold(R, C.n, C.r, entries))


def naive_rc_power(C: RCirculant, k: int) -> dense.Matrix:
    return dense.power_naive(C.ring, to_dense(C), k)


def two_strip_row(R: Ring, n: int, p: int, q: int, a: Element, b: Element) -> tuple[Element, ...]:
    if not 0 <= p < q < n:
        raise ValueError(f"need 0 <= p < q < n, got p={p}, q={q}, n={n}")
    row = [R.zero] * n
    row[p], row[q] = a, b
    return tuple(row)


def two_strip_power(
    R: Ring, n: int, r: Element, p: int, q: int, a: Element, b: Element, k: int
) -> RCirculant:
    """k-th power of the r-circulant with ``a`` at strip ``p``, ``b`` at strip ``q``, zeros elsewhere.

    Only the binomial expansion of ``(a x^p + b x^q)^k`` is needed: the term
    with ``h`` factors of ``b`` sits at ``m = kp + h(q - p)``.
    """
    two_strip_row(R, n, p, q, a, b)
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    strips = [R.zero] * n
    for h in range(k + 1):
        m = k * p + h * (q - p)
        term = R.multiply(R.pow(a, k - h), R.pow(b, h))
        term = R.multiply(term, R.from_integer(comb(k, h)))
        term = R.multiply(term, R.pow(r, m // n))
        strips[m % n] = R.add(strips[m % n], term)
    return RCirculant(R, r, tuple(strips))
