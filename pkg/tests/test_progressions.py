import itertools
import math

import pytest

from sumprod import (
    Instance,
    exceptional_set,
    oracle_member_progression,
    progression_sums_mask,
    solve_progression,
    threshold_N0,
    verify_witness,
)


def test_threshold_examples():
    rep = threshold_N0(1, 1, 1, 1, 2)
    assert (rep.a_hi, rep.c_hi, rep.N0) == (9, 45, 864)
    rep = threshold_N0(1, 1, 1, 1, 1)
    assert (rep.a_hi, rep.c_hi, rep.N0) == (3, 6, 27)
    assert threshold_N0(1, 1, 1, 1, 1).N0 < threshold_N0(1, 1, 1, 1, 2).N0


def test_threshold_identity():
    for a, b, c, d, m in ((1, 2, 3, 4, 5), (2, 2, 2, 2, 3), (7, 1, 1, 7, 2)):
        rep = threshold_N0(a, b, c, d, m)
        assert rep.N0 == rep.a_hi * b + rep.c_hi * d + m * rep.a_hi * rep.c_hi
        assert rep.a_hi == a + (d + 1) * m * m
        assert rep.c_hi == c + (a + b + 1) * m * m + (d + 1) * m**4


def test_threshold_rejects_nonpositive():
    with pytest.raises(ValueError):
        threshold_N0(0, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        threshold_N0(1, 1, -1, 1, 2)


def test_threshold_dominates_growth_inequality():
    # N0 > a'b + c'd + m(a'-m')(c'-m') across the whole (a', c') box; the
    # right side is monotone in a' and c', so corners suffice.
    for m in range(1, 5):
        for a, b, c, d in itertools.product(range(1, 4), repeat=4):
            rep = threshold_N0(a, b, c, d, m)
            for a_p in (a, rep.a_hi):
                for c_p in (c, rep.c_hi):
                    for m_p in (1, m):
                        bound = a_p * b + c_p * d + m * (a_p - m_p) * (c_p - m_p)
                        assert rep.N0 > bound


def test_solve_progression_identity():
    inst = Instance(1, 1, 1, 1, 1, 2)
    res = solve_progression(inst)
    assert res.status == "witness"
    w = res.witness
    assert (w.a_prime, w.b_prime, w.c_prime, w.d_prime) == (1, 1, 1, 1)


def test_solve_progression_above_threshold():
    inst = Instance(1, 1, 1, 1, 2, 866)
    res = solve_progression(inst)
    assert res.status == "witness" and res.threshold.N0 == 864
    w = res.witness
    assert verify_witness(inst, w)
    assert min(w.a_prime, w.b_prime, w.c_prime, w.d_prime) >= 1
    ok, quad = oracle_member_progression(inst)
    assert ok and all(q >= 0 for q in quad)


def test_solve_progression_not_member():
    assert solve_progression(Instance(1, 1, 1, 1, 2, 3)).status == "not-member"
    # below the smallest member
    assert solve_progression(Instance(2, 2, 2, 2, 3, 5)).status == "not-member"


def test_solve_progression_rejects_bad_inputs():
    with pytest.raises(ValueError):
        solve_progression(Instance(0, 1, 1, 1, 2, 10))
    with pytest.raises(ValueError):
        solve_progression(Instance(2, 2, 2, 2, 2, 8))


def test_consistency_with_oracle():
    # solver success implies oracle membership (soundness); oracle membership
    # at or above N0 implies solver success (constructive completeness)
    a, b, c, d, m = 1, 1, 1, 1, 2
    n0 = threshold_N0(a, b, c, d, m).N0
    cap = n0 + 80
    mask = progression_sums_mask(a, b, c, d, m, cap)
    for n_target in range(a * b + c * d, cap + 1, m):
        inst = Instance(a, b, c, d, m, n_target)
        res = solve_progression(inst)
        member = bool((mask >> n_target) & 1)
        if res.status == "witness":
            assert member
            assert verify_witness(inst, res.witness)
        if member and n_target >= n0:
            assert res.status == "witness"
        if not member:
            assert res.status == "below-threshold-failure"


def test_exceptional_set_small():
    # (1,1,1,1,1): every n >= 2 is 1*1 + 1*(n-1)
    assert exceptional_set(1, 1, 1, 1, 1, 27) == []
    assert exceptional_set(1, 1, 1, 1, 1, 2) == []


def test_exceptional_set_members_rechecked():
    a, b, c, d, m = 1, 1, 1, 1, 3
    n0 = threshold_N0(a, b, c, d, m).N0
    exc = exceptional_set(a, b, c, d, m, n0)
    assert exc == sorted(exc)
    assert all(e < n0 for e in exc)
    base = a * b + c * d
    for e in exc[:10]:
        assert (e - base) % m == 0
        assert not oracle_member_progression(Instance(a, b, c, d, m, e))[0]
    # and everything the set omits really is representable
    mask = progression_sums_mask(a, b, c, d, m, n0)
    omitted = [
        n for n in range(base, n0 + 1, m) if n not in set(exc)
    ]
    for n in omitted[:10] + omitted[-10:]:
        assert (mask >> n) & 1


def test_exceptional_set_cap_semantics():
    a, b, c, d, m = 2, 1, 1, 2, 3
    full = exceptional_set(a, b, c, d, m, 500)
    if full:
        e = full[-1]
        assert e in exceptional_set(a, b, c, d, m, e)  # inclusive cap
    assert exceptional_set(a, b, c, d, m, a * b + c * d - 1) == []
