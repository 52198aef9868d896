"""Walkthrough: three independent routes to the same answer.

The synthesis engine, classic LFSR synthesis (Berlekamp-Massey), the
brute-force recurrence solver and the Euclidean division cascade were
written separately on purpose.  This script runs them against each
other on the Rueppel prefixes and on random inputs.
"""

import random

from seqideal import (
    GF,
    GF2,
    QQ,
    InverseForm,
    berlekamp_massey,
    brute_force_min_poly,
    dai_ea,
    dehomogenize,
    linear_complexity,
    ralg,
    reciprocal,
    rueppel_sequence,
    synthesize,
)

# One worked instance first.  Even-length Rueppel prefixes have a
# unique minimal polynomial; LFSR synthesis hands back its reciprocal.
k = 6
seq = rueppel_sequence(2 * k)
c = dehomogenize(ralg(2 * k).f)
bm = berlekamp_massey(seq, GF2)
ea = dai_ea(k, seq, GF2)
print(f"first {2*k} bits: {''.join(map(str, seq))}")
print("engine minimal polynomial :", c)
print("division cascade          :", ea.c, " quotients:",
      ", ".join(str(q) for q in ea.quotients))
print("LFSR synthesis            : L =", bm.L, " gamma =", bm.gamma)
print("gamma == reciprocal(c)    :", bm.gamma == reciprocal(c))
print()

# The triangle at scale: all three agree for every k up to 128.
ok = True
for k in range(1, 129):
    seq = rueppel_sequence(2 * k)
    c = dehomogenize(ralg(2 * k).f)
    ok = ok and dai_ea(k, seq, GF2).c == c
    bm = berlekamp_massey(seq, GF2)
    ok = ok and bm.L == k and bm.gamma == reciprocal(c)
print("triangle agreement for k <= 128:", ok)
print()

# Random cross-checks over three fields.  The brute-force solver works
# straight from the defining recurrence system, so agreement here is
# meaningful evidence, not two copies of one algorithm.
for field in (GF2, GF(7), QQ):
    rng = random.Random(11)
    mismatches = 0
    for _ in range(300):
        n = rng.randrange(1, 11)
        seq = [field.random(rng) for _ in range(n)]
        lam = linear_complexity(seq, field)
        if lam != brute_force_min_poly(seq, field).lam:
            mismatches += 1
        if lam != berlekamp_massey(seq, field).L:
            mismatches += 1
    print(f"{field.name}: 300 random sequences, {mismatches} mismatches")

# Witness sets: when the cogenerator is not strictly larger, several
# minimal polynomials coexist and the witness set says exactly how many.
print()
seq = [0, 0, 1, 0, 1]
res = brute_force_min_poly(seq, GF2)
vop, _ = synthesize(InverseForm(GF2, seq))
print(f"sequence {seq}: lambda = {res.lam}, "
      f"|f| = {vop.f.degree}, |g| = {vop.g.degree}")
print("all minimal polynomials:", sorted(str(w) for w in res.witnesses))
