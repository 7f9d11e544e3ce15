#!/usr/bin/env python3
"""No finite part b can multiplicatively decompose the shifted composite
tail {m+1 : m composite}.  Without 1 in b a plain multiple of prod(b) is a
witness.  With 1 in b, a congruence system pins the residues of n, an
arithmetic progression supplies a prime b2(n+1)-1, and the witness follows.
This script prints the whole derivation transcript for a few parts.
"""

from decomplab import build_plan, multiplicative_witness

print("plain branch, b = {2, 3}, tail start 10:")
w = multiplicative_witness((2, 3), 10, 100)
for line in w.transcript:
    print("   ", line)
print(f"    n = {w.n}, n+1 = {w.n + 1}, validated: {w.validate()}")

for b in [(1, 2), (1, 3), (1, 2, 3), (1, 3, 4)]:
    print(f"\nprogression branch, b = {set(b)}:")
    plan = build_plan(b)
    for line in plan.transcript:
        print("   ", line)
    w = multiplicative_witness(b, 1, 10**4)
    print(f"    first prime at t = {w.t}: n = {w.n}")
    print(f"    checks: {dict(w.checks)}")
    print(f"    validated: {w.validate()}")
