"""Rational functions in one variable: reduced fractions with monic denominator."""

from __future__ import annotations

from .poly import Polynomial, gcd_monic


def compose_with_quotient(poly, num, den, order):
    """Return den**order * poly(num/den), a polynomial; needs order >= deg(poly)."""
    if poly.is_zero:
        return Polynomial.zero(poly.field)
    n = len(poly.coeffs) - 1
    if order < n:
        raise ValueError("order must be at least deg(poly)")
    acc = Polynomial.constant(poly.field, poly.coeffs[-1])
    dpow = Polynomial.one(poly.field)
    for i in range(n - 1, -1, -1):
        dpow = dpow * den
        acc = acc * num + poly.coeffs[i] * dpow
    for _ in range(order - n):
        acc = acc * den
    return acc


class RationalFunction:
    """num/den in lowest terms, den monic; num == 0 is represented as 0/1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Polynomial):
            raise TypeError("num must be a Polynomial")
        if den is None:
            den = Polynomial.one(num.field)
        num._check(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            den = Polynomial.one(num.field)
        else:
            g = gcd_monic(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            inv = num.field.one() / den.leading
            if inv != num.field.one():
                num, den = num * inv, den * inv
        self.num = num
        self.den = den

    @classmethod
    def from_polynomial(cls, p):
        return cls(p)

    @classmethod
    def constant(cls, field, c):
        return cls(Polynomial.constant(field, c))

    @classmethod
    def variable(cls, field):
        return cls(Polynomial.variable(field))

    @property
    def field(self):
        return self.num.field

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_constant(self):
        return self.den.degree == 0 and self.num.degree <= 0

    @property
    def is_polynomial(self):
        return self.den.degree == 0

    def constant_value(self):
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")
        return self.num.coefficient(0)

    def __bool__(self):
        return not self.num.is_zero

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        return RationalFunction.constant(self.field, other)

    def __add__(self, other):
        other = self._lift(other)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, n):
        if not isinstance(n, int):
            raise ValueError("exponent must be an int")
        if n < 0:
            if self.is_zero:
                raise ZeroDivisionError("0 has no negative powers")
            return RationalFunction(self.den**-n, self.num**-n)
        return RationalFunction(self.num**n, self.den**n)

    def derivative(self):
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def compose(self, inner):
        """self(inner(t)) for a RationalFunction inner."""
        if not isinstance(inner, RationalFunction):
            inner = RationalFunction(inner)
        if self.is_zero:
            return RationalFunction(Polynomial.zero(self.field))
        order = max(len(self.num.coeffs), len(self.den.coeffs)) - 1
        n = compose_with_quotient(self.num, inner.num, inner.den, order)
        d = compose_with_quotient(self.den, inner.num, inner.den, order)
        if d.is_zero:
            raise ZeroDivisionError("composition denominator vanished")
        return RationalFunction(n, d)

    def __call__(self, x):
        dv = self.den(x)
        if not dv:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / dv

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"<{self.field!r}: {self}>"
