#!/usr/bin/env python3
"""Reduction modulo p and the prime sweep.

A ℚ-correspondence reduces well at a prime p when every coefficient is
p-integral, the degrees survive, numerators stay coprime to denominators,
and the reduced maps are separable and tame.  The sweep walks a range of
primes, skips the bad ones with a reason, re-runs flat-form detection over
𝔽_p at the good ones, and marks each prime with the guard 2·d₁·d₂ < p —
beyond the guard none of the bad behaviour can occur at all.

Detection over ℚ and detection mod p tell one story: the sextic pair
((t²+1)³, t²+1) is weight-1 cyclic at every good prime with the reduced
parameters, while (t³+t, t) stays trivial everywhere.
"""

from corrforms import Correspondence, QQ, decompose_power_pair, reduce_mod_p, sweep
from corrforms.poly import Polynomial

t = Polynomial.variable(QQ)
sextic = Correspondence((t**2 + 1) ** 3, t**2 + 1)

# --- reductions at individual primes -----------------------------------------

for p in (2, 3, 7, 29):
    got = reduce_mod_p(sextic, p)
    if isinstance(got, str):
        print(f"p={p:>2}: skipped ({got})")
    else:
        print(f"p={p:>2}: reduces with degrees ({got.d1}, {got.d2})")
print()

# --- the sweep ----------------------------------------------------------------

report = sweep(sextic, 29, 97)
for entry in report.entries:
    if entry.status == "skipped":
        print(f"p={entry.p:>3}: skipped ({entry.reason})")
    else:
        print(f"p={entry.p:>3}: {entry.status} weight={entry.weight} "
              f"lambda={entry.ratio} params={entry.params} guard={entry.guard}")
print()
print("summary:", report.counts())
print("weight-1 at every guarded good prime:", report.weight1_evidence)
print()

# --- and the decomposition the sweep points to ---------------------------------

dec = decompose_power_pair(sextic.sigma1.polynomial, sextic.sigma2.polynomial)
print(f"decomposition over Q: sigma = {dec.sigma}, (m, h) = ({dec.m}, {dec.h})")
print()

# --- a trivial pair for contrast ------------------------------------------------

trivial = sweep(Correspondence(t**3 + t, t), 7, 60)
statuses = {e.status for e in trivial.entries}
print(f"(t^3+t, t) over primes in [7, 60]: statuses {sorted(statuses)}")
