"""Timing sweep: fold-based r-circulant powers against dense repeated squaring."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from . import dense
from .rcirculant import RCirculant, power_via_fold, to_dense
from .ring import Ring

CSV_COLUMNS = ("n", "k", "ring", "method", "nanoseconds", "ops")


class CountingRing(Ring):
    """Delegates to ``base`` and counts ring multiplications."""

    def __init__(self, base: Ring):
        self.base = base
        self.multiplications = 0

    @property
    def zero(self):
        return self.base.zero

    @property
    def one(self):
        return self.base.one

    def add(self, a, b):
        return self.base.add(a, b)

    def negate(self, a):
        return self.base.negate(a)

    def multiply(self, a, b):
        self.multiplications += 1
        return self.base.multiply(a, b)

    def from_integer(self, n):
        return self.base.from_integer(n)

    def try_invert(self, a):
        return self.base.try_invert(a)

    def equals(self, a, b):
        return self.base.equals(a, b)


@dataclass(frozen=True)
class BenchRow:
    n: int
    k: int
    ring: str
    method: str
    nanoseconds: int
    ops: int

    def as_tuple(self) -> tuple:
        return (self.n, self.k, self.ring, self.method, self.nanoseconds, self.ops)


def _fold(C: RCirculant, k: int) -> None:
    power_via_fold(C, k)


def _dense_squaring(C: RCirculant, k: int) -> None:
    dense.power_squaring(C.ring, to_dense(C), k)


METHODS: dict[str, Callable[[RCirculant, int], None]] = {
    "fold": _fold,
    "dense_squaring": _dense_squaring,
}


def run_bench(
    R: Ring,
    n_values: Iterable[int],
    k_values: Iterable[int],
    r: int = 1,
    seed: int = 0,
    repeat: int = 3,
) -> Iterator[BenchRow]:
    """Best-of-``repeat`` wall time and one counted run for each ``(n, k, method)``."""
    rng = random.Random(seed)
    k_values = list(k_values)
    for n in n_values:
        values = [rng.randint(-9, 9) for _ in range(n)]
        for k in k_values:
            for name, method in METHODS.items():
                C = RCirculant.from_integers(R, values, r)
                best = None
                for _ in range(max(1, repeat)):
                    start = time.perf_counter_ns()
                    method(C, k)
                    elapsed = time.perf_counter_ns() - start
                    best = elapsed if best is None else min(best, elapsed)
                counter = CountingRing(R)
                method(RCirculant(counter, C.r, C.row), k)
                yield BenchRow(n, k, str(R), name, best, counter.multiplications)
