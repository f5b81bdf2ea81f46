"""Reduction mod p, the prime sweep, and multiplicative-pair decomposition.

Frozen values: for the pair ((t^2+1)^3, t^2+1) every good prime detects a
weight-1 form with a = 0 and ratio 3 mod p; Chebyshev pairs reduce to
weight-2 forms with (s, q) = (0, -4) mod p.  Reduction skip reasons were
derived by hand (p = 3 makes the sextic inseparable, leading coefficients
vanish when p divides them, and so on).
"""

import random
from fractions import Fraction

import pytest

from corrforms.errors import UnsupportedCharacteristic
from corrforms.field import GF, QQ, FpElement
from corrforms.geometry import RationalMap
from corrforms.invariance import Correspondence, find_primitive
from corrforms.poly import Polynomial
from corrforms.sweep import (
    Decomposition,
    SweepEntry,
    chebyshev,
    decompose_power_pair,
    multiplicative_pair,
    primes_in_range,
    reduce_map_mod_p,
    reduce_mod_p,
    sweep,
)

from conftest import fp, qp, random_poly, rf


def sextic_pair():
    s2 = qp(1, 0, 1)  # t^2 + 1
    return Correspondence(s2**3, s2)


# -------------------------------------------------------------------- reduction


def test_primes_in_range():
    assert primes_in_range(2, 20) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert primes_in_range(29, 29) == [29]
    assert primes_in_range(24, 28) == []
    assert primes_in_range(20, 10) == []


def test_reduce_map_mod_p_good():
    t = qp(0, 1)
    got = reduce_map_mod_p(RationalMap(t**2 + 7), GF(5))
    assert isinstance(got, RationalMap)
    assert got.polynomial == fp(5, 2, 0, 1)


def test_reduce_map_skip_reasons():
    t = qp(0, 1)
    # denominator of a coefficient divisible by p
    got = reduce_map_mod_p(RationalMap(t**2 + Fraction(1, 5)), GF(5))
    assert isinstance(got, str) and "denominator" in got
    # degree drops when p divides the leading coefficient
    got = reduce_map_mod_p(RationalMap(5 * t**2 + t), GF(5))
    assert isinstance(got, str) and "degree" in got
    # numerator and denominator share a factor mod p: (t^2 + 5 t)/t ~ t + 5
    got = reduce_map_mod_p(RationalMap(rf(t**2 + 5 * t + 5, t)), GF(5))
    assert isinstance(got, str) and "factor" in got


def test_reduce_mod_p_correspondence():
    c = sextic_pair()
    got = reduce_mod_p(c, 7)
    assert isinstance(got, Correspondence)
    assert got.field == GF(7)
    assert got.d1 == 6 and got.d2 == 2
    # p = 3: the sextic's derivative 6 t (t^2+1)^2 vanishes mod 3
    got = reduce_mod_p(c, 3)
    assert isinstance(got, str) and "insep" in got
    # p = 2: t^2 + 1 = (t+1)^2 is still separable as a composite? no - its
    # derivative is 2t = 0, inseparable as well
    got = reduce_mod_p(c, 2)
    assert isinstance(got, str)


def test_reduce_mod_p_requires_rational_input():
    t5 = fp(5, 0, 1)
    with pytest.raises(UnsupportedCharacteristic):
        reduce_mod_p(Correspondence(t5**2, t5), 7)


# ------------------------------------------------------------------------ sweep


def test_sweep_weight1_frozen():
    rep = sweep(sextic_pair(), 29, 60)
    assert [e.p for e in rep.entries] == [29, 31, 37, 41, 43, 47, 53, 59]
    for e in rep.entries:
        assert e.status == "cyclic"
        assert e.guard  # 2 * 6 * 2 = 24 < 29
        assert e.weight == 1
        assert e.ratio == FpElement(3, e.p)
        assert e.params["a"] == FpElement(0, e.p)
    counts = rep.counts()
    assert counts["primes"] == 8 and counts["good"] == 8
    assert counts["weight1"] == 8 and counts["skipped"] == 0
    assert rep.weight1_evidence


def test_sweep_includes_bad_primes_as_skips():
    rep = sweep(sextic_pair(), 2, 10)
    by_p = {e.p: e for e in rep.entries}
    assert by_p[2].status == "skipped"
    assert by_p[3].status == "skipped"
    assert by_p[5].status == "cyclic"
    assert by_p[7].status == "cyclic"
    # guard: 2 d1 d2 = 24, so no prime below 24 is guarded
    assert not by_p[5].guard and not by_p[7].guard
    assert not rep.weight1_evidence  # unguarded hits do not count as evidence


def test_sweep_weight2_frozen():
    rep = sweep(Correspondence(chebyshev(4), chebyshev(2)), 17, 40)
    assert [e.p for e in rep.entries] == [17, 19, 23, 29, 31, 37]
    for e in rep.entries:
        assert e.status == "cyclic" and e.weight == 2
        assert e.ratio == FpElement(4, e.p)
        assert e.params["s"] == FpElement(0, e.p)
        assert e.params["q"] == FpElement(-4, e.p)
    assert rep.counts()["weight2"] == 6
    assert not rep.weight1_evidence


def test_sweep_trivial_pair():
    t = qp(0, 1)
    rep = sweep(Correspondence(t**3 + t, t), 7, 30)
    for e in rep.entries:
        assert e.status == "trivial"
    assert rep.counts()["trivial"] == len(rep.entries)


def test_sweep_consistency_with_char_zero_random():
    # whatever is detected over Q must be re-detected mod every guarded good
    # prime, with reduced parameters
    rng = random.Random(41)
    t = qp(0, 1)
    from corrforms.field import reduce_mod

    for _ in range(6):
        a = Fraction(rng.randint(-3, 3))
        m, h = rng.choice([(2, 1), (3, 1), (3, 2)])
        c = Correspondence((t - a) ** m + a, (t - a) ** h + a)
        rep0 = find_primitive(c)
        assert rep0.weight == 1
        rep = sweep(c, 2 * m * h + 1, 2 * m * h + 40)
        for e in rep.entries:
            if e.status != "cyclic" or not e.guard:
                continue
            assert e.weight == 1
            assert e.params["a"] == reduce_mod(a, GF(e.p))
            assert e.ratio == reduce_mod(Fraction(m, h), GF(e.p))


def test_sweep_parallel_determinism():
    c = sextic_pair()
    seq = sweep(c, 29, 120, jobs=1)
    par = sweep(c, 29, 120, jobs=4)
    assert seq.entries == par.entries


def test_sweep_rejects_bad_arguments():
    c = sextic_pair()
    with pytest.raises(ValueError):
        sweep(c, 29, 40, jobs=0)
    t5 = fp(5, 0, 1)
    with pytest.raises(UnsupportedCharacteristic):
        sweep(Correspondence(t5**2 + 1, t5), 7, 11)


# -------------------------------------------------------------- decomposition


def test_decompose_power_pair_frozen():
    t = qp(0, 1)
    base = t * (t + 1) ** 2
    d = decompose_power_pair(base**2, base)
    assert d.sigma == base.monic()
    assert (d.m, d.h) == (2, 1)
    assert d.lambda1 == 1 and d.lambda2 == 1
    # identical maps decompose with m = h = 1
    d = decompose_power_pair(t, t)
    assert d.sigma == t and (d.m, d.h) == (1, 1)
    # shared support but inconsistent exponent ratios: absent
    assert decompose_power_pair(t**2 * (t + 1), t * (t + 1)) is None
    # different supports: absent
    assert decompose_power_pair(t**2, (t + 1) ** 2) is None


def test_decompose_recovers_scalars():
    t = qp(0, 1)
    base = t**2 + t
    d = decompose_power_pair(3 * base**2, 5 * base)
    assert d is not None
    assert d.sigma == base  # base is monic already
    assert (d.m, d.h) == (2, 1)
    assert d.lambda1 == 3 and d.lambda2 == 5
    # non-monic base: the monic representative absorbs the scale into lambdas
    base = 2 * t**2 + 2 * t
    d = decompose_power_pair(base**3, base)
    assert d is not None
    assert d.sigma == (t**2 + t)
    assert d.lambda1 == 8 and d.lambda2 == 2
    assert d.sigma**3 * d.lambda1 == base**3
    assert d.sigma * d.lambda2 == base


def test_decompose_roundtrip_random():
    rng = random.Random(42)
    for _ in range(20):
        sigma = random_poly(rng, QQ, rng.randint(1, 5))
        if sigma.degree < 1:
            continue
        pairs = [(2, 1), (3, 1), (3, 2), (5, 2), (4, 1)]
        m, h = rng.choice(pairs)
        if m * sigma.degree > 24:
            continue
        c = multiplicative_pair(sigma, m, h)
        d = decompose_power_pair(c.sigma1.polynomial, c.sigma2.polynomial)
        assert d is not None
        assert (d.m, d.h) == (m, h)
        assert d.sigma == sigma.monic()
        lead = sigma.leading
        assert d.lambda1 == lead**m
        assert d.lambda2 == lead**h
        # detection agrees on the same pair
        rep = find_primitive(c)
        assert rep.status == "cyclic" and rep.weight == 1
        assert rep.ratio == Fraction(m, h)


def test_decompose_rejects_char_p():
    t5 = fp(5, 0, 1)
    with pytest.raises(UnsupportedCharacteristic):
        decompose_power_pair(t5**2, t5)


def test_multiplicative_pair_validation():
    t = qp(0, 1)
    with pytest.raises(ValueError):
        multiplicative_pair(t, 2, 2)
    with pytest.raises(ValueError):
        multiplicative_pair(t, 4, 2)  # not coprime
    with pytest.raises(ValueError):
        multiplicative_pair(t, 1, 2)  # m must exceed h
    with pytest.raises(ValueError):
        multiplicative_pair(qp(3), 2, 1)  # constant base


def test_chebyshev_frozen():
    t = qp(0, 1)
    assert chebyshev(0) == qp(2)
    assert chebyshev(1) == t
    assert chebyshev(2) == t**2 - 2
    assert chebyshev(3) == t**3 - 3 * t
    assert chebyshev(4) == t**4 - 4 * t**2 + 2
    assert chebyshev(3, GF(7)) == fp(7, 0, -3, 0, 1)


def test_chebyshev_composition_law():
    # T_{mn} = T_m o T_n, the defining property of the family
    for m, n in [(2, 2), (2, 3), (3, 2), (2, 4), (3, 3)]:
        assert chebyshev(m * n) == chebyshev(m).compose(chebyshev(n))


def test_chebyshev_sum_of_powers_identity():
    # T_d(u + 1/u) = u^d + 1/u^d as rational functions
    from corrforms.ratfunc import RationalFunction

    u = RationalFunction.variable(QQ)
    for d in range(1, 11):
        arg = u + u**-1
        lhs = RationalFunction.from_polynomial(chebyshev(d)).compose(arg)
        rhs = u**d + u**-d
        assert lhs == rhs


def test_chebyshev_scales_weight_two_flat_form():
    # T_d^* (dt)^2/(t^2-4) = d^2 (dt)^2/(t^2-4): the whole family shares one
    # invariant weight-2 form, scaled by the square of the degree.
    from corrforms.geometry import DifferentialForm, RationalMap, pullback
    from corrforms.ratfunc import RationalFunction

    t = qp(0, 1)
    omega = DifferentialForm(RationalFunction(qp(1), t**2 - 4), 2)
    for d in range(1, 11):
        got = pullback(RationalMap(chebyshev(d)), omega)
        assert got.weight == 2
        assert got.coeff == RationalFunction(qp(d * d), t**2 - 4)
