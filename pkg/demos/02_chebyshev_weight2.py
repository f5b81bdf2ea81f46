#!/usr/bin/env python3
"""The weight-2 dichotomy on Chebyshev pairs.

Chebyshev-style polynomials (T_0 = 2, T_1 = t, T_d = t·T_{d-1} - T_{d-2})
satisfy T_d(u + 1/u) = u^d + u^{-d}.  Pairs (T_{d1}, T_{d2}) have no
weight-1 semi-invariant form at all; their primitive lives in weight 2:

    (dt)^2 / (t^2 - 4),   with ratio λ = (d1/d2)^2.

This is the second branch of the flat-form dichotomy: cyclic pairs carry
dt/(t-a); Chebyshev pairs carry a quadratic-denominator form of weight 2.
"""

from corrforms import (
    QQ,
    Correspondence,
    chebyshev,
    find_primitive,
    flat_form_weight2,
    semi_invariance_ratio,
    solve_weight1_flat,
)
from corrforms.poly import Polynomial
from corrforms.ratfunc import RationalFunction

for d in (2, 3, 4, 6, 8):
    print(f"T_{d} = {chebyshev(d)}")
print()

# --- the defining identity, as exact rational functions ---------------------

u = RationalFunction.variable(QQ)
for d in (3, 5):
    lhs = RationalFunction.from_polynomial(chebyshev(d)).compose(u + u**-1)
    rhs = u**d + u**-d
    print(f"T_{d}(u + 1/u) == u^{d} + u^-{d}:  {lhs == rhs}")
print()

# --- detection: weight 1 fails, weight 2 succeeds ---------------------------

for d1 in (4, 6, 8):
    pair = Correspondence(chebyshev(d1), chebyshev(2))
    w1 = solve_weight1_flat(pair)
    rep = find_primitive(pair)
    print(f"(T_{d1}, T_2): weight-1 solution: {w1}")
    print(f"           weight-2 primitive: s={rep.params['s']} q={rep.params['q']} "
          f"lambda={rep.ratio}")

print()

# --- verification of the found form, independently of the search ------------

omega = flat_form_weight2(QQ, 0, -4)
pair = Correspondence(chebyshev(6), chebyshev(2))
print(f"ratio of pullbacks of (dt)^2/(t^2-4) under (T_6, T_2): "
      f"{semi_invariance_ratio(pair, omega)}")
