"""Exact arithmetic in the coefficient field Q(q,t,a).

Scalars are elements of the fraction field of ZZ[q,t,a], kept in canonical
form: numerator/denominator coprime, integer content reduced, denominator
with positive leading coefficient under the graded-lexicographic order.
Equality of canonical forms is plain representation equality, so "identity
holds" is always an exact comparison, never a simplification heuristic.

The heavy lifting (sparse polynomial arithmetic, multivariate gcd) is done
by sympy's sparse polynomial rings over gmpy2 integers; this module owns
the conventions: parameter inversions q -> 1/q, t -> 1/t, rational and
high-precision evaluation, canonical text rendering, and the coefficient
series of rho_a(u) = (u;q)_oo (au;q)_oo and its reciprocal.

All values are immutable; every function here is pure.
"""

from fractions import Fraction

import mpmath
from sympy import ZZ
from sympy.polys.fields import FracElement, field

PARAMS = ("q", "t", "a")

FIELD, q, t, a = field("q,t,a", ZZ, order="grlex")
RING = FIELD.ring

#: The scalar type: sympy FracElement over ZZ[q,t,a] in canonical form.
Scalar = FracElement

ZERO = FIELD.zero
ONE = FIELD.one


class PoleError(ZeroDivisionError):
    """Denominator vanishes at the requested evaluation point."""


class SeriesTable:
    """Coefficients c_0..c_degree of a power series in one formal variable u."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        self.coefficients = list(coefficients)

    def __getitem__(self, m):
        return self.coefficients[m]

    def __len__(self):
        return len(self.coefficients)

    @property
    def degree(self):
        return len(self.coefficients) - 1


def scalar(value):
    """Coerce an int, Fraction or Scalar into the field."""
    if isinstance(value, Scalar):
        return value
    if isinstance(value, Fraction):
        return FIELD(value.numerator) / FIELD(value.denominator)
    return FIELD(value)


def scalar_normalize(raw_num, raw_den):
    """Canonical Scalar equal to raw_num/raw_den (ring elements or ints).

    Raises ZeroDivisionError when raw_den is the zero polynomial.
    """
    num = raw_num if not isinstance(raw_num, int) else RING(raw_num)
    den = raw_den if not isinstance(raw_den, int) else RING(raw_den)
    if isinstance(num, Scalar) or isinstance(den, Scalar):
        return scalar(num) / scalar(den)
    if not den:
        raise ZeroDivisionError("scalar denominator is the zero polynomial")
    return FIELD.new(num, den)


def _reverse_exponents(poly, caps):
    """Replace each monomial exponent e_i by caps[i] - e_i where caps[i] >= 0."""
    new = {}
    for monom, coeff in poly.terms():
        key = tuple(c - e if c is not None else e for e, c in zip(monom, caps))
        new[key] = coeff
    return RING.from_dict(new)


def scalar_invert_params(s, which=("q", "t")):
    """Substitute p -> 1/p for each selected parameter, re-normalized.

    Negative powers are cleared by multiplying numerator and denominator by
    a common power of the inverted parameters, so the result is again a
    canonical polynomial fraction.  Involution: applying twice is identity.
    """
    s = scalar(s)
    idx = [PARAMS.index(p) for p in which]
    num, den = s.numer, s.denom
    caps = [None] * len(PARAMS)
    for i in idx:
        deg = max(_param_degree(num, i), _param_degree(den, i))
        caps[i] = deg
    return scalar_normalize(_reverse_exponents(num, caps),
                            _reverse_exponents(den, caps))


def _param_degree(poly, i):
    if not poly:
        return 0
    return max((m[i] for m in poly.monoms()), default=0)


def _eval_poly(poly, vals):
    """Evaluate a ring polynomial at Fractions, exactly."""
    total = Fraction(0)
    for monom, coeff in poly.terms():
        term = Fraction(int(coeff))
        for v, e in zip(vals, monom):
            if e:
                term *= v ** e
        total += term
    return total


def scalar_eval_rational(s, q0, t0, a0=Fraction(0)):
    """Exact Fraction value of s at rational (q0, t0, a0).

    Raises PoleError, naming the vanishing denominator, when the
    denominator is zero at the point.
    """
    s = scalar(s)
    vals = (Fraction(q0), Fraction(t0), Fraction(a0))
    den = _eval_poly(s.denom, vals)
    if den == 0:
        raise PoleError(f"denominator {poly_text(s.denom)} vanishes at "
                        f"q={vals[0]}, t={vals[1]}, a={vals[2]}")
    return _eval_poly(s.numer, vals) / den


def scalar_eval_numeric(s, q0, t0, a0=Fraction(0), dps=50):
    """High-precision mpf value of s at rational (q0, t0, a0)."""
    r = scalar_eval_rational(s, q0, t0, a0)
    with mpmath.workdps(dps):
        return mpmath.mpf(r.numerator) / mpmath.mpf(r.denominator)


def scalar_set_a_zero(s):
    """Specialize a = 0; requires the denominator to be regular there."""
    s = scalar(s)

    def drop(poly):
        kept = {m: c for m, c in poly.terms() if m[2] == 0}
        return RING.from_dict(kept)

    den = drop(s.denom)
    if not den:
        raise PoleError(f"denominator {poly_text(s.denom)} vanishes at a=0")
    return scalar_normalize(drop(s.numer), den)


def poly_text(poly):
    """Canonical text of an integer polynomial in (q,t,a).

    Terms in graded-lexicographic order (highest first), rendered like
    "-q*t^2+1"; multi-term polynomials are wrapped in parentheses.
    """
    if not poly:
        return "0"
    pieces = []
    for monom, coeff in poly.terms():
        c = int(coeff)
        factors = []
        for name, e in zip(PARAMS, monom):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        body = "*".join(factors)
        if not body:
            text = str(abs(c))
        elif abs(c) == 1:
            text = body
        else:
            text = f"{abs(c)}*{body}"
        sign = "-" if c < 0 else "+"
        pieces.append((sign, text))
    first_sign, first_text = pieces[0]
    out = (first_sign if first_sign == "-" else "") + first_text
    for sign, text in pieces[1:]:
        out += sign + text
    if len(pieces) > 1:
        return f"({out})"
    return out


def scalar_text(s):
    """Canonical "num/den" rendering; the "/den" part is omitted when den=1."""
    s = scalar(s)
    num = poly_text(s.numer)
    if s.denom == RING.one:
        return num
    return f"{num}/{poly_text(s.denom)}"


def qpochhammer(m):
    """(q;q)_m as a Scalar."""
    out = ONE
    for i in range(1, m + 1):
        out = out * (ONE - q ** i)
    return out


def _euler_coeffs(degree, direct, x_param=None):
    """Coefficients of (u;q)_oo (direct) or 1/(u;q)_oo, with u scaled by x_param.

    (u;q)_oo   = sum_m (-1)^m q^{m(m-1)/2} u^m / (q;q)_m
    1/(u;q)_oo = sum_m u^m / (q;q)_m
    """
    coeffs = []
    for m in range(degree + 1):
        c = ONE / qpochhammer(m)
        if direct:
            c = c * (-1) ** m * q ** (m * (m - 1) // 2)
        if x_param is not None:
            c = c * x_param ** m
        coeffs.append(c)
    return coeffs


def _cauchy_product(u, v, degree):
    return [sum((u[j] * v[m - j] for j in range(m + 1)), ZERO)
            for m in range(degree + 1)]


def rho_series(direction, degree):
    """Series coefficients of rho_a(u) = (u;q)_oo (au;q)_oo, or its reciprocal.

    Each coefficient is an exact rational function of (q, a), obtained by
    the Cauchy product of the two Euler expansions.
    """
    if direction not in ("product", "reciprocal"):
        raise ValueError(f"unknown direction {direction!r}")
    if degree < 0:
        raise ValueError("degree must be >= 0")
    direct = direction == "product"
    plain = _euler_coeffs(degree, direct)
    scaled = _euler_coeffs(degree, direct, x_param=a)
    return SeriesTable(_cauchy_product(plain, scaled, degree))


def tilde_scalar(s):
    """The involution q -> 1/q, t -> 1/t on a scalar."""
    return scalar_invert_params(s, ("q", "t"))
