"""Reduction mod p, the per-prime primitive sweep, and power-pair structure.

Good reduction at p means: no coefficient denominator divisible by p, both
degrees preserved, numerator and denominator still coprime, and the reduced
maps separable and tame.  Skip reasons are values, never exceptions, so a
sweep cannot abort half way; entries are computed by a pure per-prime
function and sorted by p, making the report independent of --jobs.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

from .errors import CorrformsError, NotPLocalUnit, UnsupportedCharacteristic
from .field import GF, QQ, is_prime, reduce_mod
from .geometry import RationalMap, is_tame
from .invariance import Correspondence, _solver_inputs, find_primitive
from .poly import Polynomial, gcd_monic, squarefree_decompose
from .ratfunc import RationalFunction


def primes_in_range(lo, hi):
    """Primes p with lo <= p <= hi, ascending."""
    return [p for p in range(max(lo, 2), hi + 1) if is_prime(p)]


def _reduce_poly(poly, field):
    return Polynomial(field, [reduce_mod(c, field) for c in poly.coeffs])


def reduce_map_mod_p(sigma, field):
    """Reduce one map mod p; returns a RationalMap or a skip-reason string."""
    try:
        num = _reduce_poly(sigma.body.num, field)
        den = _reduce_poly(sigma.body.den, field)
    except NotPLocalUnit:
        return f"a coefficient denominator is divisible by {field.p}"
    if num.degree != sigma.body.num.degree or den.degree != sigma.body.den.degree:
        return f"degree drops mod {field.p}"
    if den.degree > 0 and gcd_monic(num, den).degree > 0:
        return f"numerator and denominator share a factor mod {field.p}"
    return RationalMap(RationalFunction(num, den))


def reduce_mod_p(corr, p):
    """Reduce a correspondence over Q mod p; Correspondence or a skip reason."""
    if corr.field.characteristic != 0:
        raise UnsupportedCharacteristic("reduction starts from a pair over Q")
    field = GF(p)
    reduced = []
    for name, sigma in (("sigma1", corr.sigma1), ("sigma2", corr.sigma2)):
        out = reduce_map_mod_p(sigma, field)
        if isinstance(out, str):
            return f"{name}: {out}"
        try:
            if not out.is_separable:
                return f"{name}: inseparable mod {p}"
            verdict = is_tame(out)
        except CorrformsError as exc:
            return f"{name}: {exc}"
        if not verdict:
            return f"{name}: wild ramification at {verdict.witness} mod {p}"
        reduced.append(out)
    return Correspondence(reduced[0], reduced[1])


@dataclass(frozen=True)
class SweepEntry:
    """Per-prime outcome; guard records whether 2*d1*d2 < p."""

    p: int
    guard: bool
    status: str  # "skipped" | "trivial" | "cyclic"
    reason: str | None = None
    weight: int | None = None
    ratio: object = None
    params: dict | None = None


@dataclass(frozen=True)
class SweepReport:
    entries: tuple

    def counts(self):
        out = {"primes": len(self.entries), "skipped": 0, "trivial": 0, "weight1": 0, "weight2": 0}
        for e in self.entries:
            if e.status == "skipped":
                out["skipped"] += 1
            elif e.status == "trivial":
                out["trivial"] += 1
            else:
                out["weight1" if e.weight == 1 else "weight2"] += 1
        out["good"] = out["primes"] - out["skipped"]
        return out

    @property
    def weight1_evidence(self):
        """Every guarded good prime is cyclic of weight 1, and at least one exists."""
        guarded = [e for e in self.entries if e.guard and e.status != "skipped"]
        return bool(guarded) and all(
            e.status == "cyclic" and e.weight == 1 for e in guarded
        )


def _sweep_one(corr, p):
    guard = 2 * corr.d1 * corr.d2 < p
    reduced = reduce_mod_p(corr, p)
    if isinstance(reduced, str):
        return SweepEntry(p=p, guard=guard, status="skipped", reason=reduced)
    try:
        report = find_primitive(reduced)
    except CorrformsError as exc:
        return SweepEntry(p=p, guard=guard, status="skipped", reason=str(exc))
    if report.status == "trivial":
        return SweepEntry(p=p, guard=guard, status="trivial")
    return SweepEntry(
        p=p,
        guard=guard,
        status="cyclic",
        weight=report.weight,
        ratio=report.ratio,
        params=report.params,
    )


def sweep(corr, pmin, pmax, jobs=1):
    """Reduce at every prime in [pmin, pmax] and search primitives there."""
    if corr.field.characteristic != 0:
        raise UnsupportedCharacteristic("sweep starts from a pair over Q")
    # surface polynomial/degree precondition failures before looping
    _solver_inputs(corr)
    if not isinstance(jobs, int) or jobs < 1:
        raise ValueError("jobs must be a positive integer")
    primes = primes_in_range(pmin, pmax)
    work = partial(_sweep_one, corr)
    if jobs > 1 and len(primes) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(work, primes))
    else:
        entries = [work(p) for p in primes]
    entries.sort(key=lambda e: e.p)
    return SweepReport(tuple(entries))


@dataclass(frozen=True)
class Decomposition:
    """sigma1 = lambda1 sigma^m, sigma2 = lambda2 sigma^h, gcd(m, h) = 1, sigma monic."""

    sigma: Polynomial
    m: int
    h: int
    lambda1: object
    lambda2: object


def decompose_power_pair(sigma1, sigma2):
    """Recognize a common-power pair, or return None.

    Both squarefree decompositions are refined against each other by gcds;
    the refinement must exhaust both radicals and all multiplicity ratios
    k/l must agree as one reduced fraction m/h, which then rebuilds sigma.
    """
    for name, s in (("sigma1", sigma1), ("sigma2", sigma2)):
        if not isinstance(s, Polynomial):
            raise TypeError(f"{name} must be a Polynomial")
        if s.degree < 1:
            raise ValueError(f"{name} must be nonconstant")
    sigma1._check(sigma2)
    if sigma1.field.characteristic != 0:
        raise UnsupportedCharacteristic("power-pair decomposition works over Q only")
    parts1 = squarefree_decompose(sigma1).parts
    parts2 = squarefree_decompose(sigma2).parts
    shared = []  # (cluster, k, l)
    covered1 = {k: 0 for _, k in parts1}
    covered2 = {l: 0 for _, l in parts2}
    for a_poly, k in parts1:
        for b_poly, l in parts2:
            g = gcd_monic(a_poly, b_poly)
            if g.degree > 0:
                shared.append((g, k, l))
                covered1[k] += g.degree
                covered2[l] += g.degree
    if any(covered1[k] != a.degree for a, k in parts1):
        return None
    if any(covered2[l] != b.degree for b, l in parts2):
        return None
    ratios = {(k // math.gcd(k, l), l // math.gcd(k, l)) for _, k, l in shared}
    if len(ratios) != 1:
        return None
    m, h = ratios.pop()
    base = Polynomial.one(sigma1.field)
    for g, k, _ in shared:
        base = base * g ** (k // m)
    lam1, lam2 = sigma1.leading, sigma2.leading
    if base**m * lam1 != sigma1 or base**h * lam2 != sigma2:
        return None
    return Decomposition(base, m, h, lam1, lam2)


def multiplicative_pair(sigma, m, h):
    """(sigma^m, sigma^h); admits dt/t with ratio m/h. Needs m > h >= 1 coprime."""
    if not isinstance(sigma, Polynomial) or sigma.degree < 1:
        raise ValueError("sigma must be a nonconstant Polynomial")
    if not (isinstance(m, int) and isinstance(h, int) and m > h >= 1):
        raise ValueError("need integers m > h >= 1")
    if math.gcd(m, h) != 1:
        raise ValueError("m and h must be coprime")
    return Correspondence(sigma**m, sigma**h)


def chebyshev(d, field=QQ):
    """Monic Chebyshev-like polynomial: T_0 = 2, T_1 = t, T_d = t T_{d-1} - T_{d-2}."""
    if not isinstance(d, int) or d < 0:
        raise ValueError("d must be a nonnegative integer")
    prev = Polynomial.constant(field, 2)
    if d == 0:
        return prev
    cur = Polynomial.variable(field)
    t = Polynomial.variable(field)
    for _ in range(d - 1):
        prev, cur = cur, t * cur - prev
    return cur
