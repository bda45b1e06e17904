"""Exact k-th powers of semicirculant and r-circulant matrices over commutative rings."""

from .compositions import L_direct, enumerate_delta, multinomial
from .formal import (
    FormalEntry,
    FormalSequence,
    build_sequence,
    evaluate,
    hat,
    initial_entry,
    next_entry,
    render,
)
from .rcirculant import (
    RCirculant,
    basic_permutation,
    basic_permutation_power,
    naive_rc_power,
    power_via_fold,
    to_dense,
    two_strip_power,
)
from .ring import IntegerRing, ModularRing, Ring, make_integer_ring, make_modular_ring, parse_ring
from .semicirculant import (
    PowerResult,
    SemicirculantSpec,
    division_recursion_power,
    naive_power,
    power,
    shifted_power,
)

__all__ = [
    "FormalEntry", "FormalSequence", "IntegerRing", "L_direct", "ModularRing", "PowerResult",
    "RCirculant", "Ring", "SemicirculantSpec", "basic_permutation", "basic_permutation_power",
    "build_sequence", "division_recursion_power", "enumerate_delta", "evaluate", "hat",
    "initial_entry", "make_integer_ring", "make_modular_ring", "multinomial", "naive_power",
    "naive_rc_power", "next_entry", "parse_ring", "power", "power_via_fold", "render",
    "shifted_power", "to_dense", "two_strip_power",
]
