"""Walkthrough: recognizing and manufacturing perfect profiles.

A binary sequence has a perfect linear complexity profile when every
length-n prefix has complexity floor((n+1)/2), the staircase that a
"maximally unpredictable" sequence follows.  The synthesis profile
detects it, and inverting the construction generates such sequences on
demand: force the discrepancy at odd steps, roll dice at even ones.
"""

import random

from seqideal import (
    GF2,
    InverseForm,
    is_plcp,
    linear_complexity,
    random_plcp_sequence,
    rueppel_sequence,
    synthesize,
)

def profile_of(bits):
    _, profile = synthesize(InverseForm(GF2, bits))
    return [e.lam for e in profile]

# The Rueppel sequence is the canonical perfect-profile example.
bits = rueppel_sequence(16)
print("rueppel bits :", "".join(map(str, bits)))
print("profile      :", profile_of(bits))
print()

# A plain random sequence usually is not perfect: complexity hovers
# near n/2 but the staircase has irregular treads.
rng = random.Random(4)
bits = [rng.randrange(2) for _ in range(16)]
_, profile = synthesize(InverseForm(GF2, bits))
print("random bits  :", "".join(map(str, bits)))
print("profile      :", profile_of(bits))
print("perfect      :", is_plcp(profile))
print()

# Forcing the construction produces perfect profiles that still look
# statistically random at the even steps.
for seed in range(3):
    bits = random_plcp_sequence(24, seed=seed)
    _, profile = synthesize(InverseForm(GF2, bits))
    print(f"seed {seed}: {''.join(map(str, bits))}  "
          f"perfect = {is_plcp(profile)}  "
          f"lambda = {linear_complexity(bits, GF2)}")

# How rare are perfect profiles among all sequences?  Exhaustively for
# short lengths: the count halves the space each extra bit, matching
# the intuition that one bit per odd step is pinned down.
print()
for n in range(1, 11):
    total = 0
    for mask in range(1 << n):
        bits = [(mask >> i) & 1 for i in range(n)]
        _, profile = synthesize(InverseForm(GF2, bits))
        if is_plcp(profile):
            total += 1
    print(f"n = {n:>2}: {total:>4} of {1 << n:>5} sequences are perfect")
