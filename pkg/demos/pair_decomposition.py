"""Walk through one pair decomposition, printing every intermediate.

Pick templates a, b, c, d and a modulus m with gcd(a, b, c, d, m) = 1.  Any
target N with N ≡ ab + cd (mod m) splits as N = a'b' + c'd' where each primed
value is congruent to its template; the solver emits the four values plus the
full audit trace, and `verify_witness` re-checks the certificate with nothing
but multiplication.
"""

from sumprod import Instance, solve_class, validate_trace, verify_witness

a, b, c, d, m = 3, 5, 2, 2, 19
base = a * b + c * d
print(f"templates ({a},{b},{c},{d}) mod {m}; base value ab+cd = {base}")

for N in (base, base + 7 * m, base - 12 * m, base + m * 10**10):
    inst = Instance(a, b, c, d, m, N)
    got = solve_class(inst)
    if got is None:
        print(f"N={N}: not a member (wrong residue class)")
        continue
    w, trace = got
    print(f"\nN = {N}")
    print(f"  witness: a'={w.a_prime} b'={w.b_prime} c'={w.c_prime} d'={w.d_prime}")
    print(f"  check:   a'b'+c'd' = {w.a_prime*w.b_prime + w.c_prime*w.d_prime}")
    print(f"  verified: {verify_witness(inst, w)}")
    validate_trace(trace)  # every intermediate claim re-checked
    print(f"  trace: m'={trace.m_prime} k={trace.k} a0={trace.a0} c0={trace.c0}")
    print(f"         u={trace.u} a1={trace.a1} c1={trace.c1} v={trace.v}")
    print(f"         ell={trace.ell} (r,s)=({trace.r},{trace.s})")

# wrong residue: the only way membership fails
bad = Instance(1, 1, 1, 1, 2, 7)
print(f"\n(1,1,1,1) mod 2, N=7 -> {solve_class(bad)}  (7 is odd, ab+cd is even)")
