"""Weighted compositions and the direct multinomial expansion of L(m, p).

``enumerate_delta(m, q, p)`` yields every tuple ``(k_1, ..., k_m)`` of
nonnegative integers with ``sum(k) == p`` and ``sum(i * k_i) == q``.
``L_direct`` sums multinomial-weighted monomials over that set with
``q == m``.  None of this is used by the recursive engine in
:mod:`semicirc.formal`; it exists to check it.
"""

from __future__ import annotations

from math import factorial
from typing import Iterator, Sequence

from .ring import Element, Ring

CompositionTuple = tuple[int, ...]


def enumerate_delta(m: int, q: int, p: int) -> Iterator[CompositionTuple]:
    """Yield the solutions of ``sum(k) == p, sum(i*k_i) == q`` in lex order."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if p < 0 or q < 0 or not p <= q <= m * p:
        return
    prefix: list[int] = []

    def descend(i: int, count: int, weight: int) -> Iterator[CompositionTuple]:
        # i: next index to fill (1-based); count/weight still to distribute
        if i == m:
            if m * count == weight:
                yield tuple(prefix) + (count,)
            return
        for k in range(count + 1):
            c, w = count - k, weight - i * k
            # the remaining c parts must use indices in [i+1, m]
            if w < 0:
                break
            if (i + 1) * c <= w <= m * c:
                prefix.append(k)
                yield from descend(i + 1, c, w)
                prefix.pop()

    yield from descend(1, p, q)


def multinomial(p: int, ks: Sequence[int]) -> int:
    """Exact ``p! / (k_1! ... k_m!)``."""
    if any(k < 0 for k in ks):
        raise ValueError(f"negative part in {tuple(ks)}")
    if sum(ks) != p:
        raise ValueError(f"parts {tuple(ks)} do not sum to {p}")
    result = factorial(p)
    for k in ks:
        result //= factorial(k)
    return result


def L_direct(R: Ring, a: Sequence[Element], m: int, p: int) -> Element:
    """L(m, p) summed straight over ``enumerate_delta(m, m, p)``.

    ``a`` holds ``a_1, a_2, ...`` (so ``a[0]`` is ``a_1``) and must have at
    least ``m`` entries.
    """
    if not 1 <= p <= m:
        raise ValueError(f"need 1 <= p <= m, got p={p}, m={m}")
    if len(a) < m:
        raise ValueError(f"need at least {m} coefficients, got {len(a)}")
    total = R.zero
    for ks in enumerate_delta(m, m, p):
        term = R.from_integer(multinomial(p, ks))
        for i, k in enumerate(ks):
            if k:
                term = R.multiply(term, R.pow(a[i], k))
        total = R.add(total, term)
    return total
