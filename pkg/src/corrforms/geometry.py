"""Maps, differential forms, divisors and ramification on the projective line.

Closed points never require factorization: an affine closed-point cluster is
a monic squarefree polynomial, a divisor is a coprime list of such clusters
with integer multiplicities plus an integer multiplicity at infinity, and
ramification indices fall out of gcd refinements.

Ramification is computed in three charts:
  * finite-value affine places: zeros of the Wronskian A'B - AB', refined by
    truncated Taylor coefficients so indices are exact in any characteristic;
  * poles: via 1/sigma, the index at a pole is its multiplicity in B;
  * the point at infinity: conjugate by t -> 1/s (coefficient reversal).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    FieldMismatch,
    InseparableMap,
    WildRamification,
)
from .poly import Polynomial, gcd_monic, radical, squarefree_decompose
from .ratfunc import RationalFunction, compose_with_quotient


class RationalMap:
    """Nonconstant self-map of the projective line, given on the affine chart."""

    __slots__ = ("body",)

    def __init__(self, body):
        if isinstance(body, Polynomial):
            body = RationalFunction(body)
        if not isinstance(body, RationalFunction):
            raise TypeError("a RationalMap wraps a RationalFunction or Polynomial")
        if body.is_constant:
            raise ValueError("a map of the line must be nonconstant")
        self.body = body

    @classmethod
    def from_polynomial(cls, p):
        return cls(RationalFunction(p))

    @property
    def field(self):
        return self.body.field

    @property
    def degree(self):
        return max(self.body.num.degree, self.body.den.degree)

    @property
    def is_polynomial(self):
        return self.body.is_polynomial

    @property
    def polynomial(self):
        if not self.is_polynomial:
            raise ValueError(f"{self} is not a polynomial map")
        return self.body.num

    @property
    def is_separable(self):
        return not self.body.derivative().is_zero

    def derivative(self):
        return self.body.derivative()

    def compose(self, other):
        """self after other."""
        return RationalMap(self.body.compose(other.body))

    def __call__(self, x):
        return self.body(x)

    def __eq__(self, other):
        if not isinstance(other, RationalMap):
            return NotImplemented
        return self.body == other.body

    def __hash__(self):
        return hash(("RationalMap", self.body))

    def __str__(self):
        return str(self.body)

    def __repr__(self):
        return f"RationalMap({self.body!r})"


class MobiusTransform:
    """(a t + b) / (c t + d) with nonzero determinant."""

    __slots__ = ("field", "a", "b", "c", "d")

    def __init__(self, field, a, b, c, d):
        a, b, c, d = (field.scalar(x) for x in (a, b, c, d))
        if not (a * d - b * c):
            raise ValueError("Mobius transform must have nonzero determinant")
        self.field = field
        self.a, self.b, self.c, self.d = a, b, c, d

    def as_map(self):
        field = self.field
        num = Polynomial(field, [self.b, self.a])
        den = Polynomial(field, [self.d, self.c])
        return RationalMap(RationalFunction(num, den))

    def inverse(self):
        return MobiusTransform(self.field, self.d, -self.b, -self.c, self.a)

    def __repr__(self):
        return f"MobiusTransform({self.a}, {self.b}, {self.c}, {self.d})"


class DifferentialForm:
    """f(t) (dt)^nu with f a nonzero rational function and nu a nonzero integer."""

    __slots__ = ("coeff", "weight")

    def __init__(self, coeff, weight):
        if isinstance(coeff, Polynomial):
            coeff = RationalFunction(coeff)
        if coeff.is_zero:
            raise ValueError("differential form coefficient must be nonzero")
        if not isinstance(weight, int) or weight == 0:
            raise ValueError("weight must be a nonzero integer")
        self.coeff = coeff
        self.weight = weight

    @property
    def field(self):
        return self.coeff.field

    def scale(self, c):
        return DifferentialForm(self.coeff * c, self.weight)

    def __eq__(self, other):
        if not isinstance(other, DifferentialForm):
            return NotImplemented
        return self.weight == other.weight and self.coeff == other.coeff

    def __hash__(self):
        return hash((self.coeff, self.weight))

    def __str__(self):
        return f"({self.coeff}) (dt)^{self.weight}"

    def __repr__(self):
        return f"DifferentialForm({self.coeff!r}, {self.weight})"


class Divisor:
    """Affine closed-point clusters with multiplicities, plus one at infinity.

    Components are monic, squarefree and pairwise coprime; overlapping input
    components are refined by gcd splitting so multiplicities add correctly.
    """

    __slots__ = ("field", "affine", "at_infinity")

    def __init__(self, field, components=(), at_infinity=0):
        pieces = []
        for poly, mult in components:
            if poly.field != field:
                raise FieldMismatch("divisor component over the wrong field")
            if mult == 0 or poly.degree < 1:
                continue
            _add_component(pieces, poly.monic(), mult)
        # canonical form: one squarefree cluster per multiplicity
        by_mult = {}
        for g, m in pieces:
            if m != 0:
                by_mult[m] = by_mult[m] * g if m in by_mult else g
        merged = sorted(by_mult.items())
        self.field = field
        self.affine = tuple((g, m) for m, g in merged)
        self.at_infinity = at_infinity

    def degree(self):
        return sum(m * g.degree for g, m in self.affine) + self.at_infinity

    def support_size(self):
        """Number of geometric points in the support."""
        n = sum(g.degree for g, _ in self.affine)
        return n + (1 if self.at_infinity else 0)

    def affine_support_size(self):
        return sum(g.degree for g, _ in self.affine)

    def affine_multiplicity_sum(self):
        """Sum of multiplicities over geometric affine points."""
        return sum(m * g.degree for g, m in self.affine)

    def multiplicity_at(self, x):
        """Multiplicity at a point (field element) or at a cluster dividing
        one component (Polynomial)."""
        if isinstance(x, Polynomial):
            for g, m in self.affine:
                if x.degree >= 1 and (g % x).is_zero:
                    return m
            return 0
        for g, m in self.affine:
            if not g(x):
                return m
        return 0

    def __eq__(self, other):
        if not isinstance(other, Divisor):
            return NotImplemented
        return (
            self.field == other.field
            and self.affine == other.affine
            and self.at_infinity == other.at_infinity
        )

    def __hash__(self):
        return hash((self.field, self.affine, self.at_infinity))

    def __add__(self, other):
        if not isinstance(other, Divisor):
            return NotImplemented
        if self.field != other.field:
            raise FieldMismatch("cannot add divisors over different fields")
        return Divisor(
            self.field,
            list(self.affine) + list(other.affine),
            self.at_infinity + other.at_infinity,
        )

    def __neg__(self):
        return Divisor(
            self.field, [(g, -m) for g, m in self.affine], -self.at_infinity
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return Divisor(self.field, [(g, n * m) for g, m in self.affine], n * self.at_infinity)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Divisor):
            return NotImplemented
        return (
            self.field == other.field
            and self.affine == other.affine
            and self.at_infinity == other.at_infinity
        )

    def __hash__(self):
        return hash((self.field, self.affine, self.at_infinity))

    @property
    def is_zero(self):
        return not self.affine and self.at_infinity == 0

    def __str__(self):
        parts = [f"{m}*({g})" for g, m in self.affine]
        if self.at_infinity:
            parts.append(f"{self.at_infinity}*(inf)")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"<Divisor {self}>"


def _add_component(pieces, poly, mult):
    """Fold (poly, mult) into a coprime squarefree piece list, splitting by gcd."""
    i = 0
    while i < len(pieces) and poly.degree > 0:
        g, n = pieces[i]
        common = gcd_monic(poly, g)
        if common.degree > 0:
            repl = []
            rest = g // common
            if rest.degree > 0:
                repl.append((rest, n))
            repl.append((common, n + mult))
            pieces[i : i + 1] = repl
            i += len(repl)
            poly = poly // common
        else:
            i += 1
    if poly.degree > 0:
        pieces.append((poly, mult))


def pullback(sigma, omega):
    """sigma^* omega = (coeff o sigma) * (sigma')^weight (dt)^weight."""
    ds = sigma.body.derivative()
    if ds.is_zero:
        raise InseparableMap(f"{sigma} is inseparable")
    comp = omega.coeff.compose(sigma.body)
    return DifferentialForm(comp * ds**omega.weight, omega.weight)


def divisor_of_form(omega):
    """div(omega); the multiplicity at infinity is deg(den)-deg(num)-2*weight."""
    num, den = omega.coeff.num, omega.coeff.den
    comps = []
    if num.degree > 0:
        comps.extend(squarefree_decompose(num).parts)
    for part, k in squarefree_decompose(den).parts if den.degree > 0 else ():
        comps.append((part, -k))
    at_inf = den.degree - num.degree - 2 * omega.weight
    return Divisor(omega.field, comps, at_inf)


def conductor(omega):
    """Number of geometric points in the support of div(omega)."""
    return divisor_of_form(omega).support_size()


@dataclass(frozen=True)
class RamificationPlaces:
    """Exact ramification data of a separable map.

    affine: coprime squarefree clusters with their index e >= 2 (poles included);
    infinity: the index at t = infinity; image_infinite / image_value describe
    sigma(infinity).
    """

    affine: tuple
    infinity: int
    image_infinite: bool
    image_value: object


def ramification_places(sigma):
    body = sigma.body
    a_poly, b_poly = body.num, body.den
    field = body.field
    wronskian = a_poly.derivative() * b_poly - a_poly * b_poly.derivative()
    if wronskian.is_zero:
        raise InseparableMap(f"{sigma} is inseparable")
    d = sigma.degree

    # chart 1: affine places with finite image = zeros of the Wronskian away from poles
    w_aff = wronskian
    g = gcd_monic(w_aff, b_poly) if b_poly.degree > 0 else None
    while g is not None and g.degree > 0:
        w_aff = w_aff // g
        g = gcd_monic(w_aff, b_poly)
    entries = []
    if w_aff.degree > 0:
        for cluster, _ in squarefree_decompose(w_aff).parts:
            remaining = cluster
            j = 2
            while remaining.degree > 0:
                if j > d:
                    raise AssertionError("ramification index exceeded map degree")
                taylor_j = a_poly.hasse_derivative(j) * b_poly - a_poly * b_poly.hasse_derivative(j)
                if taylor_j.is_zero:
                    stays = remaining
                else:
                    stays = gcd_monic(remaining, taylor_j)
                    if stays.degree < remaining.degree:
                        entries.append((remaining // stays, j))
                remaining = stays
                j += 1

    # chart 2: poles, via 1/sigma — the index is the multiplicity in the denominator
    if b_poly.degree > 0:
        for cluster, mult in squarefree_decompose(b_poly).parts:
            if mult >= 2:
                entries.append((cluster, mult))

    # chart 3: infinity, via conjugation by t -> 1/s (coefficient reversal)
    deg_a, deg_b = a_poly.degree, b_poly.degree
    if deg_a > deg_b:
        e_inf = deg_a - deg_b
        image_infinite, image_value = True, None
    elif deg_a < deg_b:
        e_inf = deg_b - deg_a
        image_infinite, image_value = False, field.zero()
    else:
        rev_a = Polynomial(field, list(reversed(a_poly.coeffs)))
        rev_b = Polynomial(field, list(reversed(b_poly.coeffs)))
        psi = rev_a * rev_b.coefficient(0) - rev_b * rev_a.coefficient(0)
        e_inf = next(i for i, c in enumerate(psi.coeffs) if c)
        image_infinite, image_value = False, a_poly.leading / b_poly.leading

    entries.sort(key=lambda ge: ge[0].sort_key())
    return RamificationPlaces(tuple(entries), e_inf, image_infinite, image_value)


class Tameness:
    """Boolean verdict with a witness for the wild place, if any."""

    __slots__ = ("tame", "witness")

    def __init__(self, tame, witness=None):
        self.tame = tame
        self.witness = witness

    def __bool__(self):
        return self.tame

    def __repr__(self):
        return f"Tameness({self.tame}, witness={self.witness!r})"


def is_tame(sigma):
    """Tameness verdict: every ramification index coprime to the characteristic."""
    if not sigma.is_separable:
        return Tameness(False, "inseparable")
    p = sigma.field.characteristic
    if p == 0:
        return Tameness(True)
    places = ramification_places(sigma)
    for cluster, e in places.affine:
        if e % p == 0:
            return Tameness(False, cluster)
    if places.infinity % p == 0:
        return Tameness(False, "infinity")
    return Tameness(True)


def ramification_divisor(sigma):
    """R_sigma = sum (e_x - 1) x over ramified places; requires a tame map."""
    if not sigma.is_separable:
        raise InseparableMap(f"{sigma} is inseparable")
    verdict = is_tame(sigma)
    if not verdict:
        raise WildRamification(verdict.witness)
    places = ramification_places(sigma)
    comps = [(cluster, e - 1) for cluster, e in places.affine]
    return Divisor(sigma.field, comps, places.infinity - 1)


def mobius_conjugate(sigma, phi):
    """phi o sigma o phi^{-1}; degree is preserved."""
    fwd = phi.as_map()
    back = phi.inverse().as_map()
    out = fwd.compose(sigma).compose(back)
    if out.degree != sigma.degree:
        raise AssertionError("conjugation changed the degree")
    return out


def _preimage_cluster(h_poly, a_poly, b_poly):
    """Numerator of h(sigma): sum h_i A^i B^(deg h - i)."""
    return compose_with_quotient(h_poly, a_poly, b_poly, h_poly.degree)


def pullback_divisor(sigma, div):
    """sigma^*(div): multiplicities pick up ramification indices."""
    body = sigma.body
    a_poly, b_poly = body.num, body.den
    places = ramification_places(sigma)
    comps = []
    inf_mult = 0
    for h_poly, n in div.affine:
        pre = _preimage_cluster(h_poly, a_poly, b_poly)
        for cluster, k in squarefree_decompose(pre).parts:
            comps.append((cluster, n * k))
        if not places.image_infinite and not h_poly(places.image_value):
            inf_mult += n * places.infinity
    if div.at_infinity:
        n = div.at_infinity
        if b_poly.degree > 0:
            for cluster, k in squarefree_decompose(b_poly).parts:
                comps.append((cluster, n * k))
        if places.image_infinite:
            inf_mult += n * places.infinity
    return Divisor(sigma.field, comps, inf_mult)


def _attach(pieces, poly, key, value):
    """Refine labelled coprime pieces so that `key: value` holds exactly on poly."""
    if poly.degree < 1:
        return pieces
    out = []
    for piece, labels in pieces:
        common = gcd_monic(piece, poly)
        if common.degree > 0:
            tagged = dict(labels)
            if key in tagged and tagged[key] != value:
                raise AssertionError(f"conflicting {key} labels on {common}")
            tagged[key] = value
            out.append((common, tagged))
            rest = piece // common
            if rest.degree > 0:
                out.append((rest, labels))
            poly = poly // common
        else:
            out.append((piece, labels))
    if poly.degree > 0:
        out.append((poly, {key: value}))
    return out


def check_order_identity(sigma, omega):
    """Verify ord_x(sigma^* omega) + nu = e_x (ord_{sigma(x)} omega + nu) everywhere.

    Both sides are computed independently: the left from the divisor of the
    computed pullback, the right from the ramification refinement and the
    divisor of omega split along preimages.  Places outside every support
    satisfy the identity trivially, so only the union of supports is checked.
    """
    if not sigma.is_separable:
        raise InseparableMap(f"{sigma} is inseparable")
    verdict = is_tame(sigma)
    if not verdict:
        raise WildRamification(verdict.witness)
    nu = omega.weight
    pulled = pullback(sigma, omega)
    div_pulled = divisor_of_form(pulled)
    div_omega = divisor_of_form(omega)
    places = ramification_places(sigma)
    a_poly, b_poly = sigma.body.num, sigma.body.den

    pieces = [(g, {"m": m}) for g, m in div_pulled.affine]
    for cluster, e in places.affine:
        pieces = _attach(pieces, cluster, "e", e)
    for h_poly, n in div_omega.affine:
        pre = _preimage_cluster(h_poly, a_poly, b_poly)
        pieces = _attach(pieces, radical(pre), "n", n)
    if b_poly.degree > 0:
        pieces = _attach(pieces, radical(b_poly), "n", div_omega.at_infinity)

    for _, labels in pieces:
        m = labels.get("m", 0)
        e = labels.get("e", 1)
        n = labels.get("n", 0)
        if m + nu != e * (n + nu):
            return False

    if places.image_infinite:
        n_inf = div_omega.at_infinity
    else:
        n_inf = div_omega.multiplicity_at(places.image_value)
    return div_pulled.at_infinity + nu == places.infinity * (n_inf + nu)
