#!/usr/bin/env python3
"""Weight-1 primitives of multiplicative pairs.

The simplest correspondences carrying a semi-invariant form are the pure
power pairs (t^m, t^h): the form dt/t pulls back to m·dt/t and h·dt/t, so
it is semi-invariant with ratio λ = m/h.  The same stays true after
twisting by any base polynomial σ — the pair (σ^m, σ^h) still admits dt/t
— and after a change of coordinates, which moves the flat parameter a.

This script detects the primitive for a few such pairs, shows that the
flat parameter follows the coordinate change, and reconstructs (σ, m, h)
from the pair alone.
"""

from fractions import Fraction

from corrforms import (
    QQ,
    Correspondence,
    MobiusTransform,
    RationalMap,
    decompose_power_pair,
    find_primitive,
    mobius_conjugate,
    multiplicative_pair,
)
from corrforms.poly import Polynomial

t = Polynomial.variable(QQ)


def show(title, rep):
    print(f"{title}:")
    print(f"  status={rep.status} weight={rep.weight} lambda={rep.ratio}")
    if rep.params:
        pretty = ", ".join(f"{k}={v}" for k, v in rep.params.items())
        print(f"  flat parameters: {pretty}")
    print()


# --- pure powers -----------------------------------------------------------

show("(t^5, t^2)", find_primitive(Correspondence(t**5, t**2)))

# --- a twisted pair: base sigma = t^2 + t, exponents (3, 2) -----------------

sigma = t**2 + t
pair = multiplicative_pair(sigma, 3, 2)
show(f"(({sigma})^3, ({sigma})^2)", find_primitive(pair))

# the decomposition goes the other way: from the pair back to (sigma, m, h)
dec = decompose_power_pair(pair.sigma1.polynomial, pair.sigma2.polynomial)
print(f"decomposition: sigma={dec.sigma}, (m, h)=({dec.m}, {dec.h}), "
      f"lambda1={dec.lambda1}, lambda2={dec.lambda2}")
print()

# --- coordinate changes move the flat point --------------------------------

phi = MobiusTransform(QQ, 1, 3, 0, 1)  # t -> t + 3
s1 = mobius_conjugate(RationalMap(t**4), phi).polynomial
s2 = mobius_conjugate(RationalMap(t), phi).polynomial
show("(t^4, t) conjugated by t -> t + 3", find_primitive(Correspondence(s1, s2)))
print("The flat point a = 3 is exactly where the conjugated pair fixes the line.")
