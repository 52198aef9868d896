"""Walkthrough: minimal polynomial of a rational sequence, step by step.

The ten-term sequence below is classic: it satisfies the recurrence
given by x^5 + x - 1, and that is its unique minimal polynomial.  We
recover it with no prior bound on the complexity, watching the
generator pair evolve one term at a time.
"""

from seqideal import QQ, InverseForm, dehomogenize, synthesize_trace
from seqideal.vop_engine import minimal_leading_forms

seq = [1, 0, 0, 0, -1, 1, 0, 0, 1, -2]
F = InverseForm(QQ, seq)

print("sequence:", seq)
print("as an inverse form:", F)
print()

# Subforms are just prefixes wearing their homogeneous coat.
print("a few prefixes:")
for j in (0, -4, -5, -9):
    print(f"  F^({j}) = {F.subform(j)}")
print()

# Run the synthesis and keep the whole trace.  Each row shows the gap
# d = |g| - |f|, the discrepancy met when the next term arrived, the
# correction multiplier q, and the pair after the update.
vop, profile, trace = synthesize_trace(F)

print(f"{'k':>2} {'d':>3} {'delta':>6} {'q':>6}   pair")
for row in trace:
    d = "-" if row.d is None else row.d
    delta = "-" if row.delta is None else str(row.delta)
    q = "-" if row.q is None else str(row.q)
    print(f"{row.k:>2} {d:>3} {delta:>6} {q:>6}   ({row.f}, {row.g})")
print()

print("leading generator f :", vop.f)
print("cogenerator g       :", vop.g)
print("linear complexity   :", vop.f.degree)
print("minimal polynomial  :", dehomogenize(vop.f))

# Because |g| > |f| here, the minimal polynomial is unique.
theta = minimal_leading_forms(vop)
print("minimal leading forms:", theta.describe())
print()

# The per-prefix complexities show where the work happened: flat runs
# are free extensions, jumps are where the sequence got harder.
print("complexity profile:", [e.lam for e in profile])
