"""Independent ground truth: bounded exhaustive searches that decide
membership by direct substitution, with no reliance on the constructive
pipeline.  Used for differential testing and for reproducing the strictness
counterexamples.

Every positive answer carries an index tuple that re-evaluates to the target;
class-side searches are complete only within their box (progression-side
searches are complete outright, since all factors are positive).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

from .classes import (
    CongruenceClass,
    Progression,
    class_contains,
    product_class_contains,
    progression_product_contains,
)
from .core_arith import is_prime
from .witness import Instance, Witness, solve_dilated, verify_witness

__all__ = [
    "SearchBox",
    "GridReport",
    "StrictnessReport",
    "oracle_member_class",
    "oracle_member_progression",
    "progression_sums_mask",
    "iterated_member_search",
    "grid_verify_theorem",
    "strictness_demo",
]


@dataclass(frozen=True)
class SearchBox:
    """Inclusive index bounds applied to each of the four search indices."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty box: [{self.lo}, {self.hi}]")

    @classmethod
    def default_for(cls, inst: Instance) -> "SearchBox":
        # Generous enough to cover small-index decompositions of modest
        # targets; quadratic table cost, so keep N modest.
        half = abs(inst.N) // inst.m + inst.m
        return cls(-half, half)


def oracle_member_class(
    inst: Instance, box: SearchBox
) -> tuple[bool, Optional[tuple[int, int, int, int]]]:
    """Is N = (a+i*m)(b+j*m) + (c+k*m)(d+l*m) for indices in the box?

    Sound always; complete only within the box.  On success returns the
    lexicographically first quadruple (i, j, k, l), via a meet-in-the-middle
    table rather than four nested loops.
    """
    a, b, c, d, m, n_target = inst.a, inst.b, inst.c, inst.d, inst.m, inst.N
    lo, hi = box.lo, box.hi
    right: dict[int, tuple[int, int]] = {}
    for k in range(lo, hi + 1):
        ck = c + k * m
        for l in range(lo, hi + 1):
            p = ck * (d + l * m)
            if p not in right:
                right[p] = (k, l)
    for i in range(lo, hi + 1):
        ai = a + i * m
        for j in range(lo, hi + 1):
            got = right.get(n_target - ai * (b + j * m))
            if got is not None:
                return True, (i, j, got[0], got[1])
    return False, None


def _centered(lo: int, hi: int) -> list[int]:
    # 0, 1, -1, 2, -2, ... clipped to [lo, hi]; near-origin hits come first.
    return sorted(range(lo, hi + 1), key=lambda v: (abs(v), v))


def _member_class_fast(
    a: int, b: int, c: int, d: int, m: int, n_target: int, lo: int, hi: int
) -> bool:
    # Same search space as oracle_member_class, but membership only: scans
    # near-origin indices first and exits on the first hit.
    right = set()
    for k in range(lo, hi + 1):
        ck = c + k * m
        for l in range(lo, hi + 1):
            right.add(ck * (d + l * m))
    order = _centered(lo, hi)
    for i in order:
        ai = a + i * m
        for j in order:
            if n_target - ai * (b + j * m) in right:
                return True
    return False


def oracle_member_progression(
    inst: Instance,
) -> tuple[bool, Optional[tuple[int, int, int, int]]]:
    """Complete decision of N ∈ P_m(a)P_m(b) + P_m(c)P_m(d).

    No box is needed: every factor is positive, so all indices satisfy
    a + i*m <= N and the search space is finite.  Returns the
    lexicographically first nonnegative quadruple on success.
    """
    a, b, c, d, m, n_target = inst.a, inst.b, inst.c, inst.d, inst.m, inst.N
    if min(a, b, c, d) < 1:
        raise ValueError("progression templates must be positive")
    if n_target < a * b + c * d:
        return False, None
    cap_right = n_target - a * b
    right: dict[int, tuple[int, int]] = {}
    k = 0
    while (c + k * m) * d <= cap_right:
        ck = c + k * m
        l = 0
        while ck * (d + l * m) <= cap_right:
            p = ck * (d + l * m)
            if p not in right:
                right[p] = (k, l)
            l += 1
        k += 1
    cap_left = n_target - c * d
    i = 0
    while (a + i * m) * b <= cap_left:
        ai = a + i * m
        j = 0
        while ai * (b + j * m) <= cap_left:
            got = right.get(n_target - ai * (b + j * m))
            if got is not None:
                return True, (i, j, got[0], got[1])
            j += 1
        i += 1
    return False, None


def progression_sums_mask(
    a: int, b: int, c: int, d: int, m: int, cap: int
) -> int:
    """Bitmask of every representable target up to cap (bit n set iff
    n = x*y + z*w with x ∈ P_m(a), y ∈ P_m(b), z ∈ P_m(c), w ∈ P_m(d)).

    Exhaustive enumeration of both product sides; complete below cap for the
    same reason oracle_member_progression is.
    """
    if min(a, b, c, d) < 1:
        raise ValueError("progression templates must be positive")
    if cap < a * b + c * d:
        return 0
    left = 0
    cap_left = cap - c * d
    x = a
    while x * b <= cap_left:
        y = b
        while x * y <= cap_left:
            left |= 1 << (x * y)
            y += m
        x += m
    vals = set()
    cap_right = cap - a * b
    z = c
    while z * d <= cap_right:
        w = d
        while z * w <= cap_right:
            vals.add(z * w)
            w += m
        z += m
    total = 0
    for q in vals:
        total |= left << q
    return total & ((1 << (cap + 1)) - 1)


def iterated_member_search(
    terms: tuple[tuple[int, ...], ...],
    m: int,
    n_target: int,
    bounds: tuple[int, ...],
) -> tuple[bool, Optional[tuple[tuple[int, ...], ...]]]:
    """Bounded search for N = sum of products of (a_ij + q_ij * m).

    bounds[i] caps |q_ij| for every coefficient of term i.  Sound always;
    complete only within those boxes.  A wrong residue class is refused
    outright: every decomposition reduces to the base value mod m, so no box
    can contain one.
    """
    if len(bounds) != len(terms):
        raise ValueError("one bound per term required")
    base = sum(math.prod(t) for t in terms)
    if (n_target - base) % m != 0:
        return False, None
    # Enumerate attainable values per term, keeping the first index tuple.
    tables: list[dict[int, tuple[int, ...]]] = []
    for coefs, bd in zip(terms, bounds):
        vals: dict[int, tuple[int, ...]] = {}
        for qs in itertools.product(range(-bd, bd + 1), repeat=len(coefs)):
            v = math.prod(cf + q * m for cf, q in zip(coefs, qs))
            if v not in vals:
                vals[v] = qs
        tables.append(vals)
    # Combine all but the largest table, then finish with lookups into it.
    order = sorted(range(len(tables)), key=lambda idx: len(tables[idx]))
    big = order[-1]
    partial: dict[int, list[tuple[int, tuple[int, ...]]]] = {0: []}
    for idx in order[:-1]:
        new: dict[int, list[tuple[int, tuple[int, ...]]]] = {}
        for s, picked in partial.items():
            for v, qs in tables[idx].items():
                key = s + v
                if key not in new:
                    new[key] = picked + [(idx, qs)]
        partial = new
    for s, picked in partial.items():
        qs_big = tables[big].get(n_target - s)
        if qs_big is not None:
            chosen = dict(picked)
            chosen[big] = qs_big
            return True, tuple(chosen[idx] for idx in range(len(terms)))
    return False, None


@dataclass
class GridReport:
    """Outcome of a differential sweep of the pair solver against the oracle."""

    m_max: int
    k_window: int
    instances: int = 0
    values: int = 0
    discrepancies: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies


def grid_verify_theorem(
    m_max: int = 4,
    k_window: int = 20,
    corrupt: Optional[Callable[[Witness], Witness]] = None,
) -> GridReport:
    """Sweep all templates in [1, m]^4 for m <= m_max and every residue-valid
    target in a ±k_window band; assert solver success, certificate validity,
    and oracle agreement.  Zero discrepancies is the expected outcome.

    `corrupt` mutates each witness before verification; it exists so the
    harness can prove to itself that an injected fault is actually caught.
    """
    if m_max > 12:
        raise ValueError("sweep cap is m_max <= 12")
    report = GridReport(m_max=m_max, k_window=k_window)
    for m in range(1, m_max + 1):
        for a, b, c, d in itertools.product(range(1, m + 1), repeat=4):
            report.instances += 1
            delta = math.gcd(a, b, c, d, m)
            base = a * b + c * d
            dm = delta * m
            n_hi = max(abs(base + k_window * dm), abs(base - k_window * dm))
            half = n_hi // m + m
            right = set()
            for k in range(-half, half + 1):
                ck = c + k * m
                for l in range(-half, half + 1):
                    right.add(ck * (d + l * m))
            order = _centered(-half, half)
            for t in range(-k_window, k_window + 1):
                n_target = base + t * dm
                report.values += 1
                inst = Instance(a, b, c, d, m, n_target)
                got = solve_dilated(inst)
                if got is None:
                    report.discrepancies.append(
                        (a, b, c, d, m, n_target, "solver-not-member")
                    )
                    continue
                w = got[0]
                if corrupt is not None:
                    w = corrupt(w)
                if not verify_witness(inst, w):
                    report.discrepancies.append(
                        (a, b, c, d, m, n_target, "verify-failed", w)
                    )
                    continue
                hit = False
                for i in order:
                    ai = a + i * m
                    for j in order:
                        if n_target - ai * (b + j * m) in right:
                            hit = True
                            break
                    if hit:
                        break
                if not hit:
                    report.discrepancies.append(
                        (a, b, c, d, m, n_target, "oracle-missed")
                    )
    return report


@dataclass
class StrictnessReport:
    """The inclusion-strictness counterexamples, reproduced by search."""

    in_class: bool  # 53 ∈ R_19(15)
    in_product: bool  # 53 ∈ R_19(3) · R_19(5)
    scan_bound: int
    non_representable: list[int]
    primes_found: list[int]

    @property
    def ok(self) -> bool:
        return self.in_class and not self.in_product and self.non_representable


def strictness_demo(scan_bound: int = 1000) -> StrictnessReport:
    """Reproduce the strictness counterexample: 53 lies in R_19(15) but not in
    R_19(3)·R_19(5) (it is prime), then scan P_19(15) up to scan_bound for
    members missing from P_19(3)·P_19(5).

    The scan is bounded evidence only: showing the gap is infinite needs
    Dirichlet's theorem on primes in progressions, which this package does
    not attempt.
    """
    r15 = CongruenceClass(15, 19)
    r3 = CongruenceClass(3, 19)
    r5 = CongruenceClass(5, 19)
    in_class = class_contains(r15, 53)
    in_product = product_class_contains(r3, r5, 53)[0]
    p3 = Progression(3, 19)
    p5 = Progression(5, 19)
    missing = [
        n
        for n in range(15, scan_bound + 1, 19)
        if not progression_product_contains(p3, p5, n)[0]
    ]
    primes = [n for n in missing if is_prime(n)]
    return StrictnessReport(
        in_class=in_class,
        in_product=in_product,
        scan_bound=scan_bound,
        non_representable=missing,
        primes_found=primes,
    )
