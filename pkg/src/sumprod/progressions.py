"""One-sided (progression) witnesses: every component of the decomposition
must sit at or above its template, which holds unconditionally once the
target clears an explicit threshold N0.

Below the threshold the solver still tries, and the exceptional_set helper
measures exactly which targets have no one-sided decomposition at all.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .witness import (
    Instance,
    InternalInvariantError,
    Witness,
    _solve_core,
    verify_witness,
)
from . import oracle as _oracle

__all__ = [
    "ThresholdReport",
    "ProgressionResult",
    "threshold_N0",
    "solve_progression",
    "exceptional_set",
]

WITNESS = "witness"
NOT_MEMBER = "not-member"
BELOW_THRESHOLD_FAILURE = "below-threshold-failure"


@dataclass(frozen=True)
class ThresholdReport:
    """The explicit threshold N0 and the component bounds it is built from.

    a_hi and c_hi are the upper ends of the box the pipeline's (a', c') land
    in; N0 = a_hi*b + c_hi*d + m*a_hi*c_hi dominates the growth requirement
    for every pair inside the box.
    """

    N0: int
    a_hi: int
    c_hi: int
    instance: tuple[int, int, int, int, int]


@dataclass
class ProgressionResult:
    status: str  # WITNESS | NOT_MEMBER | BELOW_THRESHOLD_FAILURE
    witness: Optional[Witness]
    threshold: ThresholdReport


def threshold_N0(a: int, b: int, c: int, d: int, m: int) -> ThresholdReport:
    """Exact integer evaluation of the representability threshold."""
    if min(a, b, c, d, m) < 1:
        raise ValueError("all parameters must be positive")
    mm = m * m
    a_hi = a + (d + 1) * mm
    c_hi = c + (a + b + 1) * mm + (d + 1) * mm * mm
    n0 = a_hi * b + c_hi * d + m * a_hi * c_hi
    return ThresholdReport(n0, a_hi, c_hi, (a, b, c, d, m))


def _check_preconditions(a: int, b: int, c: int, d: int, m: int) -> None:
    if min(a, b, c, d) < 1:
        raise ValueError("progression templates must be positive")
    if math.gcd(a, b, c, d, m) != 1:
        raise ValueError("gcd(a, b, c, d, m) must be 1")


def solve_progression(inst: Instance) -> ProgressionResult:
    """One-sided witness for N in P_m(ab+cd): all four components end up in
    their progressions (a' >= a, b' >= b, c' >= c, d' >= d).

    Guaranteed for N >= N0.  For smaller members the lift is attempted
    anyway; when no one-sided lift exists for the constructed (a', c'), the
    outcome is labelled below-threshold-failure rather than not-member.
    """
    a, b, c, d, m, N = inst.a, inst.b, inst.c, inst.d, inst.m, inst.N
    _check_preconditions(a, b, c, d, m)
    report = threshold_N0(a, b, c, d, m)
    base = a * b + c * d
    if N < base or (N - base) % m != 0:
        return ProgressionResult(NOT_MEMBER, None, report)
    if N == base:
        # Smallest member: the templates themselves already decompose it.
        return ProgressionResult(WITNESS, Witness(a, b, c, d), report)
    got = _solve_core(a, b, c, d, m, N, require_nonneg_growth=True)
    if got is None:
        if N >= report.N0:
            raise InternalInvariantError(
                f"one-sided lift must succeed at N >= N0: {inst!r}, N0={report.N0}"
            )
        return ProgressionResult(BELOW_THRESHOLD_FAILURE, None, report)
    w, _trace = got
    if not (
        verify_witness(inst, w)
        and w.a_prime >= a
        and w.b_prime >= b
        and w.c_prime >= c
        and w.d_prime >= d
    ):
        raise InternalInvariantError(
            f"progression witness out of contract: {w!r} for {inst!r}"
        )
    return ProgressionResult(WITNESS, w, report)


def exceptional_set(
    a: int, b: int, c: int, d: int, m: int, cap: int
) -> list[int]:
    """All N in P_m(ab+cd) with N <= cap that have no one-sided decomposition.

    Decided by the oracle's exhaustive nonnegative product enumeration, which
    is complete up to cap because every factor is positive and bounded by the
    target.  The cap is inclusive; the result is ascending.
    """
    _check_preconditions(a, b, c, d, m)
    base = a * b + c * d
    if cap < base:
        return []
    mask = _oracle.progression_sums_mask(a, b, c, d, m, cap)
    return [n for n in range(base, cap + 1, m) if not (mask >> n) & 1]
