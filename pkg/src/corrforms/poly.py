"""Exact dense univariate polynomials over Q or F_p.

Coefficients are stored ascending with trailing zeros stripped; the zero
polynomial has degree NEG_INFINITY.  No irreducible factorization exists
anywhere in this package: closed points are represented by monic squarefree
polynomials, and Yun's algorithm supplies the squarefree decomposition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import FieldMismatch, WildInput

NEG_INFINITY = float("-inf")


class Polynomial:
    """Univariate polynomial with exact coefficients, ascending order."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        cs = [field.scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def _make(cls, field, coeffs):
        # trusted scalars, only strips
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self = object.__new__(cls)
        self.field = field
        self.coeffs = tuple(coeffs)
        return self

    @classmethod
    def zero(cls, field):
        return cls._make(field, [])

    @classmethod
    def one(cls, field):
        return cls._make(field, [field.one()])

    @classmethod
    def constant(cls, field, c):
        return cls(field, [c])

    @classmethod
    def variable(cls, field):
        return cls._make(field, [field.zero(), field.one()])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero()

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"cannot mix {self.field!r} and {other.field!r}")

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __neg__(self):
        return Polynomial._make(self.field, [-c for c in self.coeffs])

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.field, other)
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial._make(self.field, out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.field, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.field.scalar(other)
            return Polynomial._make(self.field, [a * c for a in self.coeffs])
        self._check(other)
        if self.is_zero or other.is_zero:
            return Polynomial.zero(self.field)
        out = [self.field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial._make(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial exponent must be a nonnegative int")
        result = Polynomial.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.field, other)
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd, dv = len(rem) - 1, other.degree
        if dd < dv:
            return Polynomial.zero(self.field), self
        inv_lead = self.field.one() / other.leading
        quot = [self.field.zero()] * (dd - dv + 1)
        for k in range(dd - dv, -1, -1):
            c = rem[k + dv] * inv_lead
            if c:
                quot[k] = c
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return Polynomial._make(self.field, quot), Polynomial._make(self.field, rem[:dv])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        x = self.field.scalar(x)
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner):
        """self(inner) for a polynomial inner."""
        self._check(inner)
        acc = Polynomial.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def derivative(self):
        # in characteristic p the i*c factor reduces mod p, so t^p |-> 0
        return Polynomial._make(
            self.field, [i * c for i, c in enumerate(self.coeffs)][1:]
        )

    def hasse_derivative(self, j):
        """j-th Hasse derivative: coefficient of (t-x)^j in the Taylor expansion."""
        if j < 0:
            raise ValueError("Hasse derivative order must be nonnegative")
        out = [
            math.comb(i, j) * self.coeffs[i] for i in range(j, len(self.coeffs))
        ]
        return Polynomial._make(self.field, out)

    def monic(self):
        if self.is_zero:
            raise ValueError("the zero polynomial cannot be made monic")
        inv = self.field.one() / self.leading
        return Polynomial._make(self.field, [c * inv for c in self.coeffs])

    def sort_key(self):
        return (len(self.coeffs), tuple(self.field.sort_key(c) for c in self.coeffs))

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if i == 0:
                term = cs
            else:
                var = "t" if i == 1 else f"t^{i}"
                term = var if cs == "1" else f"{cs}*{var}"
            if not parts:
                parts.append(f"-{term}" if neg else term)
            else:
                parts.append(f"- {term}" if neg else f"+ {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"<{self.field!r}: {self}>"


def gcd_monic(a, b):
    """Monic gcd by the Euclidean algorithm (remainders re-normalized)."""
    a._check(b)
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, (a % b)
        if not b.is_zero:
            b = b.monic()
    return a.monic()


@dataclass(frozen=True)
class SquarefreeDecomposition:
    """a = unit * prod(part^multiplicity) with monic, pairwise-coprime parts."""

    unit: object
    parts: tuple

    def recompose(self, field):
        acc = Polynomial.constant(field, self.unit)
        for part, mult in self.parts:
            acc = acc * part**mult
        return acc

    def radical(self, field):
        acc = Polynomial.one(field)
        for part, _ in self.parts:
            acc = acc * part
        return acc


def squarefree_decompose(a):
    """Yun's algorithm.

    In characteristic p an input with vanishing derivative (after removing
    the unit) is rejected with WildInput instead of extracting p-th roots;
    the recomposition is also verified there, which catches multiplicities
    that are >= p (where Yun's loop is silently wrong).
    """
    if a.is_zero:
        raise ValueError("cannot squarefree-decompose the zero polynomial")
    field = a.field
    unit = a.leading
    if a.degree == 0:
        return SquarefreeDecomposition(unit, ())
    f = a.monic()
    fp = f.derivative()
    p = field.characteristic
    if fp.is_zero:
        # only possible in characteristic p, for p-th powers
        raise WildInput(f"derivative of {f} vanishes in characteristic {p}")
    g = gcd_monic(f, fp)
    c = f // g
    d = fp // g - c.derivative()
    parts = []
    k = 1
    while c.degree > 0:
        ak = gcd_monic(c, d) if not d.is_zero else c.monic()
        if ak.degree > 0:
            parts.append((ak, k))
        c = c // ak
        d = d // ak - c.derivative()
        k += 1
    dec = SquarefreeDecomposition(unit, tuple(parts))
    if p and dec.recompose(field) != a:
        raise WildInput(
            f"squarefree recomposition failed in characteristic {p} "
            f"(multiplicity >= {p}?)"
        )
    return dec


def radical(a):
    """Product of the squarefree parts of a (monic)."""
    return squarefree_decompose(a).radical(a.field)
