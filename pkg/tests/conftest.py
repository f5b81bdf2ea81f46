"""Shared construction helpers for the test suite.

Everything here is deterministic: random data always comes from a
seeded random.Random instance created inside the test that uses it.
"""

from fractions import Fraction

from corrforms.field import QQ, GF
from corrforms.poly import Polynomial
from corrforms.ratfunc import RationalFunction


def qp(*coeffs):
    """Rational polynomial from ascending coefficients (ints/Fractions/strings)."""
    return Polynomial(QQ, list(coeffs))


def fp(p, *coeffs):
    """F_p polynomial from ascending integer coefficients."""
    return Polynomial(GF(p), list(coeffs))


def t_over(field):
    """The coordinate t as a Polynomial over the given field."""
    return Polynomial.variable(field)


def rf(num, den=None):
    """Rational function from one or two polynomials."""
    if den is None:
        return RationalFunction.from_polynomial(num)
    return RationalFunction(num, den)


def random_poly(rng, field, degree, nonzero_lead=True, span=6):
    """Random polynomial of exactly the given degree with small coefficients."""
    coeffs = [rng.randint(-span, span) for _ in range(degree)]
    lead = rng.randint(1, span) if nonzero_lead else rng.randint(-span, span)
    coeffs.append(lead)
    return Polynomial(field, coeffs)


def random_separable_poly(rng, field, degree, span=6):
    """Random degree-d polynomial that is a separable map t -> f(t).

    Resamples until the derivative is nonzero and the map degree is not
    divisible by the characteristic (so the behaviour at infinity is tame).
    """
    while True:
        f = random_poly(rng, field, degree, span=span)
        if f.derivative().is_zero:
            continue
        p = field.characteristic
        if p and degree % p == 0:
            continue
        return f


def frac(num, den=1):
    return Fraction(num, den)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one PASS/FAIL line per acceptance criterion after the run."""
    outcomes = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            name = nodeid.rsplit("::", 1)[-1]
            if not name.startswith("test_criterion_"):
                continue
            number = int(name.split("_")[2])
            ok = status == "passed"
            outcomes[number] = outcomes.get(number, True) and ok
    if outcomes:
        terminalreporter.write_sep("-", "acceptance criteria")
        for number in sorted(outcomes):
            word = "PASS" if outcomes[number] else "FAIL"
            terminalreporter.write_line(f"criterion {number}: {word}")
