"""Commutative rings with identity.

Every algorithm in the package is written against :class:`Ring`.  Elements
are plain Python values (ints for the two concrete rings shipped here) and
are only ever combined through the ring's methods.
"""

from __future__ import annotations

import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Iterable, Optional

Element = Any


class Ring(ABC):
    """A commutative ring with identity, described by its operations."""

    @property
    @abstractmethod
    def zero(self) -> Element: ...

    @property
    @abstractmethod
    def one(self) -> Element: ...

    @abstractmethod
    def add(self, a: Element, b: Element) -> Element: ...

    @abstractmethod
    def negate(self, a: Element) -> Element: ...

    @abstractmethod
    def multiply(self, a: Element, b: Element) -> Element: ...

    @abstractmethod
    def from_integer(self, n: int) -> Element:
        """Image of ``n`` under the canonical map Z -> R."""

    @abstractmethod
    def try_invert(self, a: Element) -> Optional[Element]:
        """Return the inverse of ``a``, or None when ``a`` is not a unit."""

    def equals(self, a: Element, b: Element) -> bool:
        return a == b

    def is_zero(self, a: Element) -> bool:
        return self.equals(a, self.zero)

    def subtract(self, a: Element, b: Element) -> Element:
        return self.add(a, self.negate(b))

    def sum(self, items: Iterable[Element]) -> Element:
        total = self.zero
        for x in items:
            total = self.add(total, x)
        return total

    def scale(self, n: int, a: Element) -> Element:
        """Integer multiple ``n * a``."""
        return self.multiply(self.from_integer(n), a)

    def pow(self, a: Element, e: int) -> Element:
        """``a`` to the ``e``-th power by binary exponentiation.

        ``pow(a, 0)`` is ``one`` for every ``a``, zero included.
        """
        if e < 0:
            raise ValueError(f"exponent must be nonnegative, got {e}")
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.multiply(result, base)
            e >>= 1
            if e:
                base = self.multiply(base, base)
        return result

    def format(self, a: Element) -> str:
        return str(a)


def ring_pow(R: Ring, a: Element, e: int) -> Element:
    return R.pow(a, e)


@dataclass(frozen=True)
class IntegerRing(Ring):
    """Arbitrary-precision signed integers."""

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def add(self, a, b):
        return a + b

    def negate(self, a):
        return -a

    def multiply(self, a, b):
        return a * b

    def from_integer(self, n):
        return int(n)

    def try_invert(self, a):
        if a in (1, -1):
            return a
        return None

    def __str__(self) -> str:
        return "Z"


@dataclass(frozen=True)
class ModularRing(Ring):
    """Residues modulo ``modulus``, stored canonically in ``[0, modulus)``.

    The modulus may be composite.
    """

    modulus: int

    def __post_init__(self):
        if not isinstance(self.modulus, int) or self.modulus < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {self.modulus!r}")

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def add(self, a, b):
        return (a + b) % self.modulus

    def negate(self, a):
        return -a % self.modulus

    def multiply(self, a, b):
        return a * b % self.modulus

    def from_integer(self, n):
        return int(n) % self.modulus

    def try_invert(self, a):
        a %= self.modulus
        g, x, _ = _egcd(a, self.modulus)
        if g != 1:
            return None
        return x % self.modulus

    def pow(self, a, e):
        if e < 0:
            raise ValueError(f"exponent must be nonnegative, got {e}")
        return pow(a, e, self.modulus)

    def __str__(self) -> str:
        return f"Z/{self.modulus}"


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``g = gcd(a, b) = a*x + b*y``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def make_integer_ring() -> IntegerRing:
    return IntegerRing()


def make_modular_ring(m: int) -> ModularRing:
    return ModularRing(m)


_MODULAR_RE = re.compile(r"Z/(\d+)")


def parse_ring(text: str) -> Ring:
    """Parse ``"Z"`` or ``"Z/<m>"``; anything else raises ValueError."""
    text = text.strip()
    if text == "Z":
        return IntegerRing()
    match = _MODULAR_RE.fullmatch(text)
    if match is None:
        raise ValueError(f"unknown ring {text!r}; expected 'Z' or 'Z/<m>'")
    return ModularRing(int(match.group(1)))
