"""Division-free recursion for the entries of ``[a_0, a_1, ...]^k``.

Entry ``m`` of the k-th power is

    sum_p  L(m, p) * a_0^(k-p) * C(k, p)

where the binomials ``C(k, p)`` are kept formal.  A :class:`FormalEntry`
stores only the map ``p -> L(m, p)``; the factor ``a_0^(k-p) C(k, p)`` is
implied by the key.  Shifting every key by one (``hat``) turns
``a_0^(k-p) C(k, p)`` into ``a_0^(k-p-1) C(k, p+1)``, and entry ``m+1`` is

    a_{m+1} * hat(entry_0) + a_m * hat(entry_1) + ... + a_1 * hat(entry_m).

Nothing is ever divided, so the recursion is valid over any commutative ring,
including when ``a_0`` is a zero divisor.  Evaluation at a concrete ``k``
uses ``a^(k-p) C(k, p) = [k == p]`` whenever ``k <= p``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Mapping, Optional, Sequence

from .ring import Element, Ring


@dataclass(frozen=True)
class FormalEntry:
    """Sparse map from binomial index ``p`` to a nonzero ring coefficient."""

    terms: Mapping[int, Element] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", dict(self.terms))

    def __eq__(self, other):
        if not isinstance(other, FormalEntry):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def keys(self) -> list[int]:
        return sorted(self.terms)

    def coefficient(self, p: int, R: Ring) -> Element:
        return self.terms.get(p, R.zero)


def _pruned(R: Ring, terms: Mapping[int, Element]) -> FormalEntry:
    return FormalEntry({p: c for p, c in terms.items() if not R.is_zero(c)})


def initial_entry(R: Ring) -> FormalEntry:
    """Entry 0, i.e. ``a_0^k C(k, 0)``."""
    return FormalEntry({0: R.one})


def hat(e: FormalEntry) -> FormalEntry:
    return FormalEntry({p + 1: c for p, c in e.terms.items()})


def next_entry(R: Ring, a: Sequence[Element], hats: Sequence[FormalEntry]) -> FormalEntry:
    """Entry ``m+1`` from ``a = (a_1, ..., a_{m+1}, ...)`` and the hats of entries 0..m."""
    m = len(hats) - 1
    if m < 0:
        raise ValueError("need at least one hat-transformed entry")
    if len(a) < m + 1:
        raise ValueError(f"need {m + 1} row coefficients for {m + 1} hats, got {len(a)}")
    acc: dict[int, Element] = {}
    for i in range(m + 1):
        ai = a[i]
        if R.is_zero(ai):
            continue
        for p, c in hats[m - i].terms.items():
            term = R.multiply(ai, c)
            acc[p] = R.add(acc[p], term) if p in acc else term
    return _pruned(R, acc)


@dataclass(frozen=True)
class FormalSequence:
    ring: Ring
    a0: Element
    entries: tuple[FormalEntry, ...]

    def evaluate(self, k: int) -> list[Element]:
        return [evaluate(self.ring, e, self.a0, k) for e in self.entries]


def build_sequence(R: Ring, a0: Element, tail: Sequence[Element], max_m: int) -> FormalSequence:
    """Formal entries 0..max_m of ``[a0, *tail, 0, 0, ...]^k``."""
    if max_m < 0:
        raise ValueError(f"max_m must be >= 0, got {max_m}")
    a = list(tail[:max_m]) + [R.zero] * max(0, max_m - len(tail))
    entries = [initial_entry(R)]
    hats = [hat(entries[0])]
    for m in range(max_m):
        e = next_entry(R, a, hats)
        entries.append(e)
        hats.append(hat(e))
    return FormalSequence(R, a0, tuple(entries))


def evaluate(R: Ring, e: FormalEntry, a0: Element, k: int) -> Element:
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    total = R.zero
    for p, c in e.terms.items():
        if k < p:
            continue
        if k == p:
            total = R.add(total, c)
        else:
            weight = R.multiply(R.pow(a0, k - p), R.from_integer(comb(k, p)))
            total = R.add(total, R.multiply(c, weight))
    return total


def render(R: Ring, e: FormalEntry, a0: Optional[Element] = None) -> str:
    """Human-readable form, highest binomial index first.

    With ``a0`` omitted the base is written ``a0``; otherwise its value is
    substituted.  A unit coefficient is left out.
    """
    if not e.terms:
        return "0"
    if a0 is None:
        base = "a0"
    else:
        base = R.format(a0)
        if base.startswith("-"):
            base = f"({base})"
    parts = []
    for p in sorted(e.terms, reverse=True):
        c = e.terms[p]
        coeff = "" if R.equals(c, R.one) else f"{R.format(c)}·"
        power = f"{base}^k" if p == 0 else f"{base}^(k-{p})"
        parts.append(f"{coeff}{power}·C(k,{p})")
    return " + ".join(parts)
