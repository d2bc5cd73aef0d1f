"""Witnesses for iterated sums of products: h >= 2 terms, term i a product of
k_i congruence classes, with k_1 <= ... <= k_h.

Two shapes are decidable here: k_1 = 1 (the lone class absorbs the whole
residue) and k_1 = k_2 = 2 with the leading coefficients coprime to m jointly
(handled by the pair solver, trailing terms frozen at their base values).
Everything else is refused with an explicit unsupported-shape outcome; the
general question is open.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .witness import Instance, solve_class

__all__ = [
    "IteratedSpec",
    "IteratedWitness",
    "IteratedResult",
    "absorb_k1",
    "solve_iterated",
    "verify_iterated",
]

WITNESS = "witness"
NOT_MEMBER = "not-member"
UNSUPPORTED_SHAPE = "unsupported-shape"


@dataclass(frozen=True)
class IteratedSpec:
    """Shape and coefficients of one iterated sum-of-products problem."""

    m: int
    terms: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"modulus must be >= 1, got {self.m}")
        terms = tuple(tuple(int(x) for x in t) for t in self.terms)
        object.__setattr__(self, "terms", terms)
        if len(terms) < 2:
            raise ValueError("need at least two terms")
        lengths = [len(t) for t in terms]
        if any(k < 1 for k in lengths):
            raise ValueError("every term needs at least one coefficient")
        if lengths != sorted(lengths):
            raise ValueError("terms must be sorted by nondecreasing length")

    def shape(self) -> tuple[int, ...]:
        return tuple(len(t) for t in self.terms)

    def base_value(self) -> int:
        return sum(math.prod(t) for t in self.terms)


@dataclass(frozen=True)
class IteratedWitness:
    """Coefficient values, mirroring the problem's term structure, summing
    exactly to N."""

    values: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class IteratedResult:
    status: str  # WITNESS | NOT_MEMBER | UNSUPPORTED_SHAPE
    witness: Optional[IteratedWitness]


def absorb_k1(
    a0: int, factors: Sequence[int], m: int, N: int
) -> Optional[IteratedWitness]:
    """Witness for N ∈ R_m(a0) + R_m(a1)···R_m(ak): the single class soaks up
    the entire residue, the product factors stay untouched.

    Returns None iff N !≡ a0 + a1···ak (mod m).
    """
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    factors = tuple(int(x) for x in factors)
    if not factors:
        raise ValueError("need at least one product factor")
    base = a0 + math.prod(factors)
    if (N - base) % m != 0:
        return None
    q = (N - base) // m
    return IteratedWitness(((a0 + q * m,), factors))


def solve_iterated(spec: IteratedSpec, N: int) -> IteratedResult:
    """Decide and witness N ∈ Σ_i Π_j R_m(a_ij) for the supported shapes.

    k1 = 1: absorb the residue into term 1, trailing terms at base values
    (the h > 2 case is the same by induction, all residue in front).
    k1 = k2 = 2 with gcd(a11, a12, a21, a22, m) = 1: pair-solve the first two
    terms against N minus the frozen tail.  Anything else: unsupported-shape,
    never a guess.
    """
    ks = spec.shape()
    m = spec.m
    base = spec.base_value()
    if ks[0] == 1:
        if (N - base) % m != 0:
            return IteratedResult(NOT_MEMBER, None)
        q = (N - base) // m
        values = ((spec.terms[0][0] + q * m,),) + spec.terms[1:]
        return IteratedResult(WITNESS, IteratedWitness(values))
    if len(ks) >= 2 and ks[0] == 2 and ks[1] == 2:
        a11, a12 = spec.terms[0]
        a21, a22 = spec.terms[1]
        if math.gcd(a11, a12, a21, a22, m) != 1:
            return IteratedResult(UNSUPPORTED_SHAPE, None)
        if (N - base) % m != 0:
            return IteratedResult(NOT_MEMBER, None)
        tail = sum(math.prod(t) for t in spec.terms[2:])
        got = solve_class(Instance(a11, a12, a21, a22, m, N - tail))
        assert got is not None  # residue already checked
        w = got[0]
        values = (
            (w.a_prime, w.b_prime),
            (w.c_prime, w.d_prime),
        ) + spec.terms[2:]
        return IteratedResult(WITNESS, IteratedWitness(values))
    return IteratedResult(UNSUPPORTED_SHAPE, None)


def verify_iterated(spec: IteratedSpec, wit: IteratedWitness, N: int) -> bool:
    """Certificate check: shape match, componentwise congruence, exact sum."""
    if len(wit.values) != len(spec.terms):
        return False
    for got, want in zip(wit.values, spec.terms):
        if len(got) != len(want):
            return False
        if any((g - w) % spec.m != 0 for g, w in zip(got, want)):
            return False
    return sum(math.prod(t) for t in wit.values) == N
