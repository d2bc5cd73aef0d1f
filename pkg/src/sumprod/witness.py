"""Constructive decompositions N = a'b' + c'd' with each component congruent
to its template modulo m.

The pipeline follows the underlying existence proof step by step and records
every intermediate in a WitnessTrace: solve b*x + d*y + m'*z = k, reduce x, y
into fixed windows, shift (a0, c0) by a CRT-chosen multiple of m so the gcd
drops to m', clean the remaining prime interference out of c1, and finish
with a Bezout (or Sylvester, for one-sided growth) lift of (b, d).  Every
trace field has an invariant that is a theorem; a violation is a bug, never
an input condition, and raises InternalInvariantError.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .core_arith import (
    crt_solve,
    ext_gcd,
    factorize,
    solve_linear3,
    sylvester_nonneg,
    _vp,
)

__all__ = [
    "Instance",
    "Witness",
    "WitnessTrace",
    "SubgroupWitness",
    "InternalInvariantError",
    "lemma_lift",
    "solve_class",
    "solve_dilated",
    "subgroup_witness",
    "verify_witness",
    "validate_trace",
]


class InternalInvariantError(RuntimeError):
    """A proof-level invariant failed at runtime.  Always a bug in this
    package (or a falsified theorem), never a caller error."""


@dataclass(frozen=True)
class Instance:
    """One problem instance: templates a, b, c, d, modulus m >= 1, target N."""

    a: int
    b: int
    c: int
    d: int
    m: int
    N: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"modulus must be >= 1, got {self.m}")

    def delta(self) -> int:
        return math.gcd(self.a, self.b, self.c, self.d, self.m)


@dataclass(slots=True)
class Witness:
    """Certificate a'b' + c'd' = N with componentwise congruence mod m."""

    a_prime: int
    b_prime: int
    c_prime: int
    d_prime: int


@dataclass(slots=True)
class SubgroupWitness:
    """Quadruple with a*w + b*x + c*y + d*z + m*(w*x + y*z) = t."""

    w: int
    x: int
    y: int
    z: int
    t: int

    def evaluate(self, a: int, b: int, c: int, d: int, m: int) -> int:
        return (
            a * self.w
            + b * self.x
            + c * self.y
            + d * self.z
            + m * (self.w * self.x + self.y * self.z)
        )


@dataclass(slots=True)
class WitnessTrace:
    """Every intermediate of the constructive pipeline, for auditing.

    `instance` is the (positive-representative) instance the pipeline
    actually ran on; all invariants are stated relative to it.
    """

    instance: Instance
    m_prime: int
    k: int
    x: int
    y: int
    z: int
    x_prime: int
    y_prime: int
    q_x: int
    q_y: int
    a0: int
    c0: int
    p1: tuple[int, ...]
    p2: tuple[int, ...]
    u: int
    a1: int
    c1: int
    p3: tuple[int, ...]
    v: int
    a_prime: int
    c_prime: int
    ell: int
    r: int
    s: int


def _rep_1_to_m(v: int, m: int) -> int:
    # Representative of v mod m in [1, m]; the pipeline needs a, b, c, d >= 1.
    r = v % m
    return r if r else m


def verify_witness(inst: Instance, w: Witness) -> bool:
    """Pure-arithmetic certificate check: four congruences plus the exact sum."""
    m = inst.m
    return (
        (w.a_prime - inst.a) % m == 0
        and (w.b_prime - inst.b) % m == 0
        and (w.c_prime - inst.c) % m == 0
        and (w.d_prime - inst.d) % m == 0
        and w.a_prime * w.b_prime + w.c_prime * w.d_prime == inst.N
    )


def validate_trace(trace: WitnessTrace) -> None:
    """Re-check every trace invariant; raise InternalInvariantError on failure.

    These are the intermediate claims of the existence proof, asserted as
    runtime checks on every successful solve.
    """
    t = trace
    i = t.instance
    a, b, c, d, m, n_target = i.a, i.b, i.c, i.d, i.m, i.N
    mp = t.m_prime
    mm = m * m
    prod_p = math.prod(t.p1 + t.p2)
    prod_p3 = math.prod(t.p3)
    checks = {
        "m_prime": mp == math.gcd(a, c, m),
        "k": n_target == a * b + c * d + t.k * m,
        "eq_A": b * t.x + d * t.y + mp * t.z == t.k,
        "x_prime_window": 0 <= t.x_prime <= mp - 1,
        "y_prime_window": b * m <= t.y_prime <= b * m + mp - 1,
        "eq_B_x": t.x == t.q_x * mp + t.x_prime,
        "eq_B_y": t.y == t.q_y * mp + t.y_prime,
        "a0": t.a0 == a + m * t.x_prime,
        "c0": t.c0 == c + m * t.y_prime,
        "u_window": 0 <= t.u < prod_p <= mp <= m if prod_p > 1 else t.u == 0,
        "a1": t.a1 == t.a0 + d * m * t.u,
        "c1": t.c1 == t.c0 - b * m * t.u,
        "v_window": 0 <= t.v <= prod_p3 <= t.a1,
        "a_prime": t.a_prime == t.a1,
        "c_prime": t.c_prime == t.c1 + m * mp * t.v,
        "gcd_final": math.gcd(t.a_prime, t.c_prime) == mp,
        "congruence_mm": (n_target - (t.a_prime * b + t.c_prime * d)) % (m * mp)
        == 0,
        "ineq2_a": a <= t.a_prime <= a + (d + 1) * mm,
        "ineq2_c": c <= t.c_prime <= c + (a + b + 1) * mm + (d + 1) * mm * mm,
        "ell": t.ell * (m * mp) == n_target - (t.a_prime * b + t.c_prime * d),
        "lift": t.a_prime * t.r + t.c_prime * t.s == t.ell * mp,
    }
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        raise InternalInvariantError(
            f"trace invariants violated: {failed}; trace={t!r}"
        )


def lemma_lift(
    a_p: int,
    c_p: int,
    b: int,
    d: int,
    m: int,
    N: int,
    require_nonneg_growth: bool = False,
) -> Optional[tuple[int, int]]:
    """Lift (b, d) to (b', d') with b' ≡ b, d' ≡ d (mod m) and a'b' + c'd' = N.

    Requires N ≡ a'b + c'd (mod m*m') where m' = gcd(a', c'); violating that
    is a caller error.  With require_nonneg_growth the lift additionally
    satisfies b' >= b and d' >= d; this is guaranteed whenever
    N >= a'b + c'd + m(a' - m')(c' - m') and is best-effort (exact) below,
    returning None when no one-sided lift exists.
    """
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    m_p = math.gcd(a_p, c_p)
    if m_p == 0:
        raise ValueError("a' = c' = 0 admits no lift")
    rem = N - (a_p * b + c_p * d)
    if rem % (m * m_p) != 0:
        raise ValueError("N !≡ a'b + c'd (mod m*m')")
    ell = rem // (m * m_p)
    if require_nonneg_growth:
        if a_p < 1 or c_p < 1:
            raise ValueError("one-sided growth requires positive a', c'")
        rs = sylvester_nonneg(a_p, c_p, m_p, ell)
        if rs is None:
            return None
        r, s = rs
    else:
        e = ext_gcd(a_p, c_p)
        r, s = e.s * ell, e.t * ell
    return b + m * r, d + m * s


def _solve_core(
    a: int, b: int, c: int, d: int, m: int, N: int, require_nonneg_growth: bool
) -> Optional[tuple[Witness, WitnessTrace]]:
    # Pre: a, b, c, d >= 1, gcd(a, b, c, d, m) = 1, N ≡ ab + cd (mod m).
    # None is only possible on the one-sided path, when no growth lift exists.
    k = (N - (a * b + c * d)) // m
    m_p = math.gcd(a, c, m)
    sol = solve_linear3(b, d, m_p, k)
    if sol is None:
        raise InternalInvariantError(
            f"b*x + d*y + m'*z = k unsolvable with gcd 1: "
            f"(a,b,c,d,m,N)=({a},{b},{c},{d},{m},{N})"
        )
    x, y, z = sol
    x_p = x % m_p
    y_p = b * m + ((y - b * m) % m_p)
    q_x = (x - x_p) // m_p
    q_y = (y - y_p) // m_p
    a0 = a + m * x_p
    c0 = c + m * y_p

    g0 = math.gcd(a0, c0)
    primes_mp = factorize(m_p).primes() if m_p > 1 else ()
    p1, p2 = [], []
    for p in primes_mp:
        if _vp(p, m_p) < _vp(p, g0):
            p1.append(p)
        else:
            p2.append(p)
    crt_u = crt_solve([(1, p) for p in p1] + [(0, p) for p in p2])
    if crt_u is None:  # distinct prime moduli: always solvable
        raise InternalInvariantError(f"u-system unsolvable for primes {primes_mp}")
    u = crt_u[0]

    a1 = a0 + d * m * u
    c1 = c0 - b * m * u
    p3 = tuple(p for p in factorize(a1).primes() if m % p != 0)
    mmp = m * m_p
    congs = []
    for p in p3:
        inv = pow(mmp, -1, p)
        congs.append(((1 - c1) * inv % p, p))
    crt_v = crt_solve(congs)
    if crt_v is None:
        raise InternalInvariantError(f"v-system unsolvable for primes {p3}")
    v = crt_v[0]
    a_p = a1
    c_p = c1 + mmp * v

    lift = lemma_lift(a_p, c_p, b, d, m, N, require_nonneg_growth)
    if lift is None:
        return None
    b_p, d_p = lift
    ell = (N - (a_p * b + c_p * d)) // (m * m_p)
    trace = WitnessTrace(
        instance=Instance(a, b, c, d, m, N),
        m_prime=m_p,
        k=k,
        x=x,
        y=y,
        z=z,
        x_prime=x_p,
        y_prime=y_p,
        q_x=q_x,
        q_y=q_y,
        a0=a0,
        c0=c0,
        p1=tuple(p1),
        p2=tuple(p2),
        u=u,
        a1=a1,
        c1=c1,
        p3=p3,
        v=v,
        a_prime=a_p,
        c_prime=c_p,
        ell=ell,
        r=(b_p - b) // m,
        s=(d_p - d) // m,
    )
    validate_trace(trace)
    return Witness(a_p, b_p, c_p, d_p), trace


def solve_class(inst: Instance) -> Optional[tuple[Witness, WitnessTrace]]:
    """Witness for N in the coprime case gcd(a, b, c, d, m) = 1.

    Returns None exactly when N !≡ ab + cd (mod m); otherwise a verified
    Witness together with its full WitnessTrace.  Templates are first moved
    to their representatives in [1, m], which the positivity arguments of
    the construction require (congruences are unaffected).
    """
    a, b, c, d, m, N = inst.a, inst.b, inst.c, inst.d, inst.m, inst.N
    if math.gcd(a, b, c, d, m) != 1:
        raise ValueError(
            "gcd(a, b, c, d, m) != 1: use solve_dilated for the general case"
        )
    an, bn, cn, dn = (
        _rep_1_to_m(a, m),
        _rep_1_to_m(b, m),
        _rep_1_to_m(c, m),
        _rep_1_to_m(d, m),
    )
    if (N - (an * bn + cn * dn)) % m != 0:
        return None
    got = _solve_core(an, bn, cn, dn, m, N, require_nonneg_growth=False)
    if got is None:  # integer lift cannot fail
        raise InternalInvariantError(f"integer lift failed for {inst!r}")
    w, trace = got
    if not verify_witness(inst, w):
        raise InternalInvariantError(f"witness failed verification: {w!r} for {inst!r}")
    return w, trace


def _solve_dilated_traced(
    inst: Instance,
) -> Optional[tuple[Witness, int, Instance, WitnessTrace]]:
    # Shared by solve_dilated and the CLI (which also wants the reduced
    # instance and its trace).
    delta = inst.delta()
    base = inst.a * inst.b + inst.c * inst.d
    if (inst.N - base) % (delta * inst.m) != 0:
        return None
    # N = base + t*delta*m = delta^2 * (AB + CD + t*M): divisibility is forced.
    if inst.N % (delta * delta) != 0:
        raise InternalInvariantError(f"N not divisible by delta^2 for {inst!r}")
    reduced = Instance(
        inst.a // delta,
        inst.b // delta,
        inst.c // delta,
        inst.d // delta,
        inst.m // delta,
        inst.N // (delta * delta),
    )
    got = solve_class(reduced)
    if got is None:
        raise InternalInvariantError(f"reduced instance unsolvable: {reduced!r}")
    w0, trace = got
    if delta == 1:
        w = w0
    else:
        w = Witness(
            delta * w0.a_prime,
            delta * w0.b_prime,
            delta * w0.c_prime,
            delta * w0.d_prime,
        )
    if not verify_witness(inst, w):
        raise InternalInvariantError(
            f"dilated witness failed verification: {w!r} for {inst!r}"
        )
    return w, delta, reduced, trace


def solve_dilated(inst: Instance) -> Optional[tuple[Witness, int]]:
    """Witness for arbitrary gcd: divide through by delta = gcd(a, b, c, d, m),
    solve the coprime instance, and scale the witness back up.

    Returns None exactly when N !≡ ab + cd (mod delta*m); the returned
    witness satisfies the congruences for the original modulus m.
    """
    got = _solve_dilated_traced(inst)
    if got is None:
        return None
    return got[0], got[1]


def subgroup_witness(
    a: int, b: int, c: int, d: int, m: int, t: int
) -> Optional[SubgroupWitness]:
    """Quadruple (w, x, y, z) with a*w + b*x + c*y + d*z + m*(w*x + y*z) = t.

    Exists iff delta = gcd(a, b, c, d, m) divides t.  Obtained by solving the
    pair decomposition for N = ab + cd + m*t and unraveling
    (a + m*x)(b + m*w) + (c + m*z)(d + m*y) = ab + cd + m*(aw + bx + cy + dz
    + m*(wx + yz)).
    """
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    delta = math.gcd(a, b, c, d, m)
    if t % delta != 0:
        return None
    if t == 0:
        return SubgroupWitness(0, 0, 0, 0, 0)
    inst = Instance(a, b, c, d, m, a * b + c * d + m * t)
    got = solve_dilated(inst)
    if got is None:
        raise InternalInvariantError(f"subgroup target unreachable: t={t}, {inst!r}")
    wit, _ = got
    sw = SubgroupWitness(
        w=(wit.b_prime - b) // m,
        x=(wit.a_prime - a) // m,
        y=(wit.d_prime - d) // m,
        z=(wit.c_prime - c) // m,
        t=t,
    )
    if sw.evaluate(a, b, c, d, m) != t:
        raise InternalInvariantError(f"subgroup witness mis-evaluates: {sw!r}")
    return sw
