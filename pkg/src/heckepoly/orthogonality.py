"""Numeric Jackson-integral inner products, Gram matrices, and norm checks.

Lattice points, weights and integrands are exact rationals (gmpy2.mpq);
each summand is computed exactly and only converted to a high-precision
float (mpmath, configurable precision) at accumulation time, so weight
evaluation can never be a source of roundoff failure.

The V-family inner product sums over the lattice (q^-m)_l, m = 0..M per
coordinate; the U-family over the bilateral lattice {q^m} u {a q^m}.  The
infinite products in the weights are truncated at J factors, and the dash
rule deletes exactly the vanishing factor j = m of (x;q)_oo at x = q^-m.
Truncation is monitored, not proven: every result carries the magnitude of
the first discarded term.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from gmpy2 import mpq

from .compositions import (composition_constants, compositions_of,
                           phi_map, spectral_vector, swap_map, weight)
from .operators import (apply_h, apply_omega, apply_T, random_poly)
from .polyring import MultiPoly, reversal
from .scalars import q as q_sym, scalar_invert_params
from .asc import asc_U, asc_V


@dataclass(frozen=True)
class InnerProductConfig:
    """Numeric parameters: 0 < q0 < 1, t0 = q0^k with integer k >= 1, a0 < 0."""

    q0: Fraction
    k: int
    a0: Fraction
    M: int = 60
    J: int = 120
    tol: float = 1e-8
    dps: int = 50

    def __post_init__(self):
        if not 0 < self.q0 < 1:
            raise ValueError("q0 must lie in (0,1)")
        if self.a0 >= 0:
            raise ValueError("a0 must be negative")
        if self.k < 1:
            raise ValueError("k must be a positive integer")

    @property
    def t0(self):
        return self.q0 ** self.k


class PoleError(ZeroDivisionError):
    """A weight factor vanished where the dash rule does not apply."""


def _mpf(x, dps):
    with mpmath.workdps(dps):
        f = Fraction(x.numerator, x.denominator)
        return mpmath.mpf(f.numerator) / mpmath.mpf(f.denominator)


def _qpoch(x, qv, nfac):
    """(x; q)_nfac as an exact mpq, erroring on an unexpected zero factor."""
    out = mpq(1)
    power = mpq(1)
    for _ in range(nfac):
        factor = 1 - x * power
        if factor == 0:
            raise PoleError(f"vanishing factor in ({x}; q)_oo")
        out *= factor
        power *= qv
    return out


def _qpoch_dashed(x, qv, nfac, skip):
    """(x; q)_nfac with the factor j = skip deleted (the dash rule)."""
    out = mpq(1)
    power = mpq(1)
    for j in range(nfac):
        factor = 1 - x * power
        if j == skip:
            if factor != 0:
                raise PoleError(f"dash rule invoked but factor {j} is nonzero")
        else:
            if factor == 0:
                raise PoleError(f"vanishing factor j={j} not covered by dash rule")
            out *= factor
        power *= qv
    return out


def weight_eval(kind, x, config, lattice_index=None):
    """The one-variable weight at lattice point x, as an exact mpq.

    For the V-weight, lattice_index = m identifies x = q^-m so that the
    dash rule removes exactly the factor j = m.
    """
    qv = mpq(config.q0.numerator, config.q0.denominator)
    av = mpq(config.a0.numerator, config.a0.denominator)
    x = mpq(x.numerator, x.denominator)
    J = config.J
    if kind == "V":
        num = _qpoch(qv, qv, J) * _qpoch(1 / av, qv, J) * _qpoch(qv * av, qv, J)
        if lattice_index is None:
            den = _qpoch(x, qv, J)
        else:
            den = _qpoch_dashed(x, qv, J, lattice_index)
        den *= _qpoch(x / av, qv, J)
        return num / den
    if kind == "U":
        num = _qpoch(qv * x, qv, J) * _qpoch(qv * x / av, qv, J)
        den = _qpoch(qv, qv, J) * _qpoch(av, qv, J) * _qpoch(qv / av, qv, J)
        return num / den
    raise ValueError(f"unknown weight {kind!r}")


def jackson_integral(f, domain, config):
    """One-dimensional q-integral of a numeric function over [a,1] or [1,oo].

    [1,oo]: (1-q) sum_m f(q^-m) q^-m;  [a,1]: (1-q)(sum f(q^m) q^m
    - a sum f(a q^m) q^m).  Returns (value, last_term) as mpf; warns in the
    report when the last term is not below tol * |value|.
    """
    qv = mpq(config.q0.numerator, config.q0.denominator)
    av = mpq(config.a0.numerator, config.a0.denominator)
    total = mpmath.mpf(0)
    last = mpq(0)
    with mpmath.workdps(config.dps):
        for m in range(config.M + 1):
            if domain == "[1,inf]":
                pt = qv ** (-m)
                last = f(Fraction(pt.numerator, pt.denominator)) * pt
            elif domain == "[a,1]":
                pt1, pt2 = qv ** m, av * qv ** m
                last = (f(Fraction(pt1.numerator, pt1.denominator)) * pt1
                        - av * f(Fraction(pt2.numerator, pt2.denominator)) * pt1)
            else:
                raise ValueError(f"unknown domain {domain!r}")
            last = mpq(last)
            total += _mpf(last, config.dps)
        total *= _mpf(1 - qv, config.dps)
    return total, _mpf(last * (1 - qv), config.dps)


def _lattice_1d(which, config):
    """Per-coordinate lattice: list of (point, lattice weight, weight value)."""
    qv = mpq(config.q0.numerator, config.q0.denominator)
    av = mpq(config.a0.numerator, config.a0.denominator)
    out = []
    if which == "V":
        for m in range(config.M + 1):
            pt = qv ** (-m)
            w = weight_eval("V", pt, config, lattice_index=m)
            out.append((pt, (1 - qv) * pt, w))
    elif which == "U":
        for m in range(config.M + 1):
            pt = qv ** m
            out.append((pt, (1 - qv) * pt, weight_eval("U", pt, config)))
        for m in range(config.M + 1):
            pt = av * qv ** m
            out.append((pt, -av * (1 - qv) * qv ** m,
                        weight_eval("U", pt, config)))
    else:
        raise ValueError(f"unknown family {which!r}")
    return out


def _numeric_terms(f, config):
    """Polynomial terms with coefficients evaluated to exact mpq."""
    from .scalars import scalar_eval_rational
    out = []
    for exps, coeff in f.sorted_terms():
        val = scalar_eval_rational(coeff, config.q0, config.t0, config.a0)
        out.append((exps, mpq(val.numerator, val.denominator)))
    return out


def _eval_terms(terms, powers, idx):
    total = mpq(0)
    for exps, coeff in terms:
        v = coeff
        for pos, e in enumerate(exps):
            if e:
                v *= powers[pos][idx[pos]][e]
        total += v
    return total


class _LatticeData:
    """Measure table for an n-fold lattice: per-tuple exact measure."""

    def __init__(self, which, n, config):
        self.which = which
        self.n = n
        self.config = config
        self.points = _lattice_1d(which, config)
        qv = mpq(config.q0.numerator, config.q0.denominator)
        self.delta_factors = [qv ** p for p in range(-(config.k - 1), config.k + 1)]

    def measure(self, idx):
        pts = [self.points[i][0] for i in idx]
        m = mpq(1)
        for i in idx:
            m *= self.points[i][1] * self.points[i][2]
        for p in self.delta_factors:
            for i in range(self.n):
                for j in range(i + 1, self.n):
                    m *= pts[i] - p * pts[j]
        return m

    def indices(self):
        return itertools.product(range(len(self.points)), repeat=self.n)

    def max_degree_powers(self, maxdeg):
        """powers[pos][i][e] = (point_i)^e shared across coordinates."""
        table = [[pt ** e for e in range(maxdeg + 1)]
                 for pt, _, _ in self.points]
        return [table] * self.n


def inner_product(f, g, which, config):
    """<f, g> over the n-fold lattice; returns (value, tail estimate) as mpf."""
    values, tail = gram_matrix([f, g], which, config)
    return values[0][1], tail


def gram_matrix(polys, which, config):
    """Exact-summand Gram matrix of the given polynomials, plus tail estimate.

    The tail estimate is the magnitude of the measure at the first discarded
    lattice shell (all coordinates at their first out-of-range index), times
    the largest |f_i f_j| there.
    """
    n = polys[0].n
    lat = _LatticeData(which, n, config)
    maxdeg = max(p.total_degree() for p in polys)
    powers = lat.max_degree_powers(maxdeg)
    terms = [_numeric_terms(p, config) for p in polys]
    size = len(polys)
    with mpmath.workdps(config.dps):
        acc = [[mpmath.mpf(0)] * size for _ in range(size)]
        for idx in lat.indices():
            mu = lat.measure(idx)
            if mu == 0:
                continue
            vals = [_eval_terms(tm, powers, idx) for tm in terms]
            for i in range(size):
                for j in range(i, size):
                    s = vals[i] * vals[j] * mu
                    if s != 0:
                        acc[i][j] += _mpf(s, config.dps)
        for i in range(size):
            for j in range(i):
                acc[i][j] = acc[j][i]
    tail = _tail_estimate(lat, polys, terms, powers, config)
    return acc, tail


def _tail_estimate(lat, polys, terms, powers, config):
    """Summand magnitude at the first out-of-range lattice corner."""
    qv = mpq(config.q0.numerator, config.q0.denominator)
    m = config.M + 1
    n = lat.n
    try:
        if lat.which == "V":
            pt = qv ** (-m)
            w = weight_eval("V", pt, config, lattice_index=m)
        else:
            pt = qv ** m
            w = weight_eval("U", pt, config)
    except PoleError:
        return mpmath.mpf("inf")
    rest = lat.points[0]
    pts = [pt] + [rest[0]] * (n - 1)
    mu = (1 - qv) * pt * w
    for other in pts[1:]:
        mu *= rest[1] * rest[2]
    for p in lat.delta_factors:
        for i in range(n):
            for j in range(i + 1, n):
                mu *= pts[i] - p * pts[j]
    big = mpq(0)
    for tm in terms:
        v = abs(sum(c * pt ** sum(e) for e, c in tm))
        big = max(big, v)
    with mpmath.workdps(config.dps):
        return abs(_mpf(mu, config.dps)) * _mpf(big * big, config.dps)


# -- closed-form norms ----------------------------------------------------


def _binom3(n):
    return n * (n - 1) * (n - 2) // 6


def _binom2(n):
    return n * (n - 1) // 2


def _eval_scalar(s, config):
    from .scalars import scalar_eval_rational
    return scalar_eval_rational(s, config.q0, config.t0, config.a0)


def _qpoch_exact(config, m):
    """(q;q)_m as an exact Fraction."""
    out = Fraction(1)
    for i in range(1, m + 1):
        out *= 1 - config.q0 ** i
    return out


def norm_zero(family, n, config):
    """N_0 for the V- or U-family at t = q^k, exact."""
    q0, a0, k = config.q0, config.a0, config.k
    prod = Fraction(1)
    for l in range(1, n + 1):
        prod *= _qpoch_exact(config, k * l) / _qpoch_exact(config, k)
    if family == "V":
        tpow = q0 ** (k * (-2 * k * _binom3(n) - k * _binom2(n)))
        return (1 - q0) ** n * a0 ** (k * _binom2(n)) * tpow * prod
    if family == "U":
        # t^{k C(n,3) - (k-1)/2 C(n,2)} = q^{k^2 C(n,3) - k(k-1)/2 C(n,2)}
        exp = k * k * _binom3(n) - (k * (k - 1) * _binom2(n)) // 2
        return (1 - q0) ** n * (-a0) ** (k * _binom2(n)) * q0 ** exp * prod
    raise ValueError(f"unknown family {family!r}")


def closed_norm(family, eta, config):
    """The closed-form norm of E^(V)_eta or E^(U)_eta, exact."""
    eta = tuple(eta)
    n, d = len(eta), weight(eta)
    c = composition_constants(eta)
    de = _eval_scalar(c.d_prime * c.e / c.d, config)
    q0, a0 = config.q0, config.a0
    t0 = config.t0
    if family == "V":
        pref = (a0 / q0 * t0 ** (2 - 2 * n)) ** d
        stat = q0 ** (-2 * c.a_stat) * t0 ** (c.l_stat + c.l_prime_stat)
    elif family == "U":
        pref = (a0 * t0 ** (n - 1)) ** d
        stat = q0 ** c.a_stat * t0 ** (-c.l_stat)
    else:
        raise ValueError(f"unknown family {family!r}")
    return pref * stat * de * norm_zero(family, n, config)


# -- Gram/norm verification ------------------------------------------------


@dataclass
class GramResult:
    family: str
    degree_cap: int
    etas: list
    matrix: list          # mpf entries
    off_diag_max: float   # max |G_ij| / sqrt(|G_ii G_jj|), i != j
    diag_rel_err: float   # max relative error of diagonals vs closed form
    recurrence_err: float  # max relative error of the two norm recurrences
    tail: float
    config: InnerProductConfig

    @property
    def passed(self):
        tol = self.config.tol
        return (self.off_diag_max < tol and self.diag_rel_err < tol
                and self.recurrence_err < tol)

    def to_json_dict(self):
        return {
            "family": self.family,
            "degree_cap": self.degree_cap,
            "etas": [list(e) for e in self.etas],
            "matrix": [[mpmath.nstr(v, 17) for v in row] for row in self.matrix],
            "off_diag_max": mpmath.nstr(mpmath.mpf(self.off_diag_max), 8),
            "diag_rel_err": mpmath.nstr(mpmath.mpf(self.diag_rel_err), 8),
            "recurrence_err": mpmath.nstr(mpmath.mpf(self.recurrence_err), 8),
            "tail": mpmath.nstr(mpmath.mpf(self.tail), 8),
            "pass": self.passed,
            "config": {
                "q0": str(self.config.q0), "k": self.config.k,
                "a0": str(self.config.a0), "M": self.config.M,
                "J": self.config.J, "tol": self.config.tol,
            },
        }

    def to_csv(self):
        lines = ["eta;" + ";".join("_".join(map(str, e)) for e in self.etas)]
        for eta, row in zip(self.etas, self.matrix):
            lines.append("_".join(map(str, eta)) + ";"
                         + ";".join(mpmath.nstr(v, 17) for v in row))
        return "\n".join(lines) + "\n"


def gram_and_norms(family, degree_cap, n, config):
    """Gram matrix of the family up to |eta| <= degree_cap, checked against
    the closed-form norms and the two norm recurrences."""
    etas = [eta for d in range(degree_cap + 1) for eta in compositions_of(d, n)]
    build = asc_V if family == "V" else asc_U
    polys = [build(eta).poly for eta in etas]
    matrix, tail = gram_matrix(polys, family, config)
    size = len(etas)
    with mpmath.workdps(config.dps):
        off = mpmath.mpf(0)
        for i in range(size):
            for j in range(size):
                if i != j:
                    denom = mpmath.sqrt(abs(matrix[i][i] * matrix[j][j]))
                    off = max(off, abs(matrix[i][j]) / denom)
        diag_err = mpmath.mpf(0)
        for i, eta in enumerate(etas):
            closed = _mpf(closed_norm(family, eta, config), config.dps)
            diag_err = max(diag_err, abs(matrix[i][i] - closed) / abs(closed))
        rec_err = _recurrence_errors(family, etas, matrix, config)
    return GramResult(family, degree_cap, etas, matrix, float(off),
                      float(diag_err), float(rec_err), float(tail), config)


def _recurrence_errors(family, etas, matrix, config):
    """Measured-diagonal ratios against the raising and swap recurrences.

    Stated for the V-family; the U-family recurrences are the same formulas
    with q, t inverted (its norm is the V-norm at 1/q, 1/t).
    """
    index = {eta: i for i, eta in enumerate(etas)}
    n = len(etas[0])
    q0, t0, a0 = config.q0, config.t0, config.a0
    if family == "U":
        q0 = 1 / q0
        t0 = 1 / t0
    err = mpmath.mpf(0)
    for eta in etas:
        up = phi_map(eta)
        if up in index:
            expected = (a0 * t0 ** (1 - n) * q0 ** (-2 * eta[0] - 1)
                        * _scalar_at(composition_constants(up).d_prime
                                     / composition_constants(eta).d_prime,
                                     config, q0, t0))
            measured = matrix[index[up]][index[up]] / matrix[index[eta]][index[eta]]
            err = max(err, abs(measured - _mpf(expected, config.dps))
                      / abs(_mpf(expected, config.dps)))
        for i in range(1, n):
            if eta[i - 1] > eta[i]:
                swapped = swap_map(eta, i)
                if swapped not in index:
                    continue
                eps = spectral_vector(eta)
                tdelta = _scalar_at(eps[i - 1] / eps[i], config, q0, t0)
                expected = ((1 - tdelta / t0) * (1 - tdelta * t0)
                            / (t0 * (1 - tdelta) ** 2))
                measured = (matrix[index[swapped]][index[swapped]]
                            / matrix[index[eta]][index[eta]])
                err = max(err, abs(measured - _mpf(expected, config.dps))
                          / abs(_mpf(expected, config.dps)))
    return err


def _scalar_at(s, config, q0, t0):
    from .scalars import scalar_eval_rational
    return scalar_eval_rational(s, Fraction(q0), Fraction(t0), config.a0)


# -- adjoints, moments, measure identities ----------------------------------


def qbinom_int(r, kk, q0):
    """Gaussian binomial [r choose k]_q at exact rational q."""
    num = Fraction(1)
    den = Fraction(1)
    for i in range(kk):
        num *= 1 - q0 ** (r - i)
        den *= 1 - q0 ** (i + 1)
    return num / den


def moment_polynomial(r, q0, a0):
    """h_r(q, a) = sum_k [r choose k]_q a^k: the U-family moments."""
    return sum(qbinom_int(r, kk, q0) * a0 ** kk for kk in range(r + 1))


def adjoint_and_measure_checks(config, n=2, seed=20240901, rmax=3):
    """Numeric adjoint identities, moment form of the q-integral reflection,
    and the exact reversal identity of the discretized weight.

    Returns a list of dicts {name, lhs, rhs, error, pass}.
    """
    import random
    rng = random.Random(seed)
    checks = []

    def record(name, lhs, rhs, scale=None):
        with mpmath.workdps(config.dps):
            denom = abs(scale) if scale else max(abs(lhs), abs(rhs), mpmath.mpf(1))
            err = abs(lhs - rhs) / denom
        checks.append({"name": name, "lhs": mpmath.nstr(lhs, 12),
                       "rhs": mpmath.nstr(rhs, 12),
                       "error": float(err), "pass": float(err) < config.tol})

    pairs = [(MultiPoly.variable(n, 1), MultiPoly.variable(n, 2)),
             (MultiPoly.variable(n, 1) * MultiPoly.variable(n, 2),
              MultiPoly.variable(n, 1)),
             (random_poly(n, 2, rng), random_poly(n, 2, rng))]

    for label, (f, g) in zip("abc", pairs):
        for i in range(1, n):
            lhs, _ = inner_product(apply_T(f, i), g, "V", config)
            rhs, _ = inner_product(f, apply_T(g, i), "V", config)
            record(f"adjoint.T{i}.{label}", lhs, rhs)
        lhs, _ = inner_product(apply_omega(f, -1), g, "V", config)
        x1 = MultiPoly.variable(n, 1)
        from .scalars import a as a_sym, t as t_sym
        inner = (x1 - MultiPoly.constant(n, q_sym)) \
            * (x1 - MultiPoly.constant(n, q_sym * a_sym)) * g
        omg = apply_omega(inner, 1).scale(t_sym ** (n - 1) / (a_sym * q_sym))
        rhs, _ = inner_product(f, omg, "V", config)
        record(f"adjoint.omega.{label}", lhs, rhs)
        for i in range(1, n + 1):
            lhs, _ = inner_product(apply_h(f, i), g, "V", config)
            rhs, _ = inner_product(f, apply_h(g, i), "V", config)
            record(f"selfadjoint.h{i}.{label}", lhs, rhs)

    # (q-integral reflection) via the exact moment polynomial h_r:
    # the U-side functional at q0 equals h_r(q0, a0); the V-side at q0
    # equals h_r(1/q0, a0), i.e. the U-side with q -> 1/q.
    for r in range(rmax + 1):
        u_val, _ = jackson_integral(lambda x, r=r: weight_fraction("U", x, config)
                                    * x ** r, "[a,1]", config)
        u_val = u_val / _mpf(mpq(1) - mpq(config.q0.numerator,
                                          config.q0.denominator), config.dps)
        record(f"qiuv.U-moment.r={r}", u_val,
               _mpf(moment_polynomial(r, config.q0, config.a0), config.dps),
               scale=mpmath.mpf(1))
        v_val, _ = jackson_integral(lambda x, r=r: weight_fraction("V", x, config)
                                    * x ** r, "[1,inf]", config)
        v_val = v_val / _mpf(mpq(1) - mpq(config.q0.numerator,
                                          config.q0.denominator), config.dps)
        record(f"qiuv.V-moment.r={r}", v_val,
               _mpf(moment_polynomial(r, 1 / config.q0, config.a0), config.dps),
               scale=mpmath.mpf(1))

    ok = deltain_check(n, config.k)
    checks.append({"name": f"deltain.n={n}.k={config.k}", "lhs": "symbolic",
                   "rhs": "symbolic", "error": 0.0 if ok else 1.0, "pass": ok})
    return checks


def weight_fraction(kind, x, config):
    """weight_eval wrapper taking and returning Fractions (for jackson_integral)."""
    x = Fraction(x)
    if kind == "V":
        # identify the lattice index m with x = q0^-m for the dash rule
        m = 0
        probe = Fraction(1)
        while probe != x and m <= config.M + 2:
            m += 1
            probe /= config.q0
        w = weight_eval("V", x, config, lattice_index=m if probe == x else None)
    else:
        w = weight_eval("U", x, config)
    return Fraction(w.numerator, w.denominator)


def delta_poly(n, k, reverse=False):
    """The discretized interaction factor as an exact polynomial."""
    out = MultiPoly.constant(n, 1)
    for p in range(-(k - 1), k + 1):
        qp = q_sym ** p
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                out = out * (MultiPoly.variable(n, i)
                             - MultiPoly.variable(n, j).scale(qp))
    return reversal(out) if reverse else out


def deltain_check(n, k):
    """Exact identity: Delta_{1/q}^{(k)}(x) = q^{-k n(n-1)} Delta_q^{(k)}(x^R)."""
    lhs = delta_poly(n, k).map_coeffs(
        lambda c: scalar_invert_params(c, ("q",)))
    rhs = delta_poly(n, k, reverse=True).scale(q_sym ** (-k * n * (n - 1)))
    return lhs == rhs
