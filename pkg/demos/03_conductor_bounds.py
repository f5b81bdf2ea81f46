#!/usr/bin/env python3
"""Divisors, conductors, and the exact conductor bound.

The conductor of a form is the number of geometric points in the support
of its divisor — computed here over closed points (squarefree polynomials),
so no roots are ever extracted.  For a semi-invariant form of a pair with
deg σ₁ > deg σ₂ the conductor obeys an exact bound; on the line the bound
from genera and the bound from ramification degrees agree:

    (4·d₁ + 2·d₂ − 6) / (d₁ − d₂)

The same machinery checks two sharper affine statements: the affine
multiplicities of a detected primitive sum to −ν, and once d₁ ≥ 4·d₂ the
affine part of the support has at most 2 points.
"""

from fractions import Fraction

from corrforms import (
    QQ,
    Correspondence,
    affine_conductor_guard,
    affine_multiplicity_sum,
    chebyshev,
    conductor,
    divisor_of_form,
    find_primitive,
    flat_form_weight1,
    genus_conductor_bound,
    ramification_conductor_check,
)
from corrforms.poly import Polynomial

t = Polynomial.variable(QQ)

# --- divisors of the two flat shapes ----------------------------------------

for omega, name in [
    (flat_form_weight1(QQ, 0), "dt/t"),
    (flat_form_weight1(QQ, 2), "dt/(t-2)"),
]:
    d = divisor_of_form(omega)
    print(f"div({name}) = {d}   conductor = {conductor(omega)}")
print()

# --- conductor <= bound on a spread of instances -----------------------------

instances = [
    Correspondence(t**6, t**2),
    Correspondence(t**5, t**2),
    Correspondence(t**12, t**5),
    Correspondence(chebyshev(8), chebyshev(2)),
]
for pair in instances:
    rep = find_primitive(pair)
    chk = ramification_conductor_check(pair, rep.primitive)
    closed = genus_conductor_bound(0, 0, pair.d1, pair.d2)
    both = Fraction(4 * pair.d1 + 2 * pair.d2 - 6, pair.d1 - pair.d2)
    print(f"d1={pair.d1:>2} d2={pair.d2}: conductor={chk.conductor} "
          f"bound={chk.bound} holds={chk.holds} "
          f"(genus formula {closed} == ramification formula {both})")
print()

# --- the affine refinements ---------------------------------------------------

pair = Correspondence(t**8, t**2)
rep = find_primitive(pair)
res = affine_multiplicity_sum(rep.primitive)
print(f"affine multiplicity sum of the primitive: {res.total} "
      f"(expected -nu = {res.expected})")
print(f"affine support has at most 2 points once d1 >= 4 d2: "
      f"{affine_conductor_guard(pair, rep.primitive)}")
