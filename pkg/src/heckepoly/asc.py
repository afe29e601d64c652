"""Non-symmetric Al-Salam-Carlitz polynomials and everything they connect to.

The V-family is built through two independent pipelines that must agree
exactly: the operator pipeline (tilde-Macdonald polynomial evaluated at the
commuting operators E_i, applied to 1, with the (-a)^{|eta|}/alpha_eta
prefactor) and the series pipeline (1/rho_a(-script D_i) applied to E_eta,
a terminating expansion since the script Dunkl operators lower degree).
The U-family is the hat-reflection of V and has its own series pipeline.

On top of the families: the two Cauchy-type kernels and their operator
properties, generating functions, special-point evaluations, the
inhomogeneous (shifted) polynomials G_eta obtained at a = 0, Sahi's
evaluation, q-binomial coefficients in two independent ways, sum rules
against symmetric binomials, the symmetrization down to the symmetric
families, and the Hamiltonian comparison on symmetric functions.

Kernels live in 2n variables: block 0 is x_1..x_n, block 1 is y_1..y_n,
and operators act on a block through apply_on_block.
"""

from functools import lru_cache
from itertools import permutations as _perms

from . import compositions as comps
from .compositions import (alpha_coefficient, composition_constants,
                           compositions_of, conjugate, b_stat, node_stats,
                           partition_of, partitions_of, phi_map, psi_map,
                           spectral_vector, weight)
from .linalg import solve_unique
from .macdonald import (IdentityViolationError, expand_in_macdonald_basis,
                        macdonald_poly, nonsym_macdonald, principal_point,
                        sym_macdonald)
from .macdonald import operator_substitution
from .operators import (OperatorReport, apply_bigE, apply_D, apply_h,
                        apply_h_hat, apply_lower, apply_lower_adjoint,
                        apply_raise, apply_s, apply_scriptD, apply_T,
                        apply_uplus, apply_Y, t_factorial, tilde_conj)
from .polyring import MultiPoly, hat, reversal, tilde
from .scalars import (ONE, ZERO, Scalar, a, q, qpochhammer, rho_series,
                      scalar_set_a_zero, t, tilde_scalar)


# -- the two families ---------------------------------------------------


class ASCRecord:
    """One member of the V- or U-family, with its index."""

    __slots__ = ("eta", "family", "poly")

    def __init__(self, eta, family, poly):
        self.eta = eta
        self.family = family
        self.poly = poly

    def __repr__(self):
        return f"ASCRecord(eta={self.eta}, {self.family}: {self.poly})"


def _series_apply_inverse_rho(f, i, cap):
    """Apply sum_m r_m (-script D_i)^m to f, r = reciprocal rho series."""
    r = rho_series("reciprocal", cap)
    total = f.scale(r[0])
    cur = f
    for m in range(1, cap + 1):
        cur = apply_scriptD(cur, i)
        if not cur:
            break
        total = total + cur.scale(r[m] * (-1) ** m)
    return total


def _series_apply_rho_tilde(f, i, cap):
    """Apply sum_m p_m (-q)^m (tilde script D_i)^m to f, p = product rho series."""
    p = rho_series("product", cap)
    sdt = tilde_conj(lambda g: apply_scriptD(g, i))
    total = f.scale(p[0])
    cur = f
    for m in range(1, cap + 1):
        cur = sdt(cur)
        if not cur:
            break
        total = total + cur.scale(p[m] * (-q) ** m)
    return total


def asc_V_pipeline(eta, pipeline):
    """One pipeline for E^(V)_eta, uncached and uncompared."""
    eta = comps.as_parts(eta)
    n, d = len(eta), weight(eta)
    if pipeline == "operator":
        raised = operator_substitution(macdonald_poly(eta, "inv"), apply_bigE, n)
        return raised.scale((-a) ** d / alpha_coefficient(eta))
    if pipeline == "series":
        f = macdonald_poly(eta)
        for i in range(1, n + 1):
            f = _series_apply_inverse_rho(f, i, d)
        return f
    raise ValueError(f"unknown pipeline {pipeline!r}")


@lru_cache(maxsize=None)
def asc_V(eta):
    """E^(V)_eta, computed via both pipelines, which must agree exactly."""
    eta = comps.as_parts(eta)
    op = asc_V_pipeline(eta, "operator")
    ser = asc_V_pipeline(eta, "series")
    if op != ser:
        raise IdentityViolationError(
            f"V-family pipelines disagree for eta={eta}: {op - ser}")
    return ASCRecord(eta, "V", op)


def asc_U_pipeline(eta, pipeline):
    """Reflection pipeline is definitional; the series pipeline applies
    rho_a(-q tilde-script-D_i) to tilde-E_eta *in the reversed labeling*:
    the product runs in the second kernel slot, which holds y^R, so the
    operators act on reversed variables and the reversal is taken last."""
    eta = comps.as_parts(eta)
    n, d = len(eta), weight(eta)
    if pipeline == "reflection":
        return hat(asc_V(eta).poly)
    if pipeline == "series":
        f = macdonald_poly(eta, "inv")
        for i in range(1, n + 1):
            f = _series_apply_rho_tilde(f, i, d)
        return reversal(f)
    raise ValueError(f"unknown pipeline {pipeline!r}")


@lru_cache(maxsize=None)
def asc_U(eta):
    """E^(U)_eta = E^(V)_eta(x^R; 1/q, 1/t), cross-checked against its series form."""
    eta = comps.as_parts(eta)
    refl = asc_U_pipeline(eta, "reflection")
    ser = asc_U_pipeline(eta, "series")
    if refl != ser:
        raise IdentityViolationError(
            f"U-family pipelines disagree for eta={eta}: {refl - ser}")
    return ASCRecord(eta, "U", refl)


def eigen_replay_V(eta):
    """h_i E^(V)_eta = eps_i(eta) E^(V)_eta for every i."""
    eta = comps.as_parts(eta)
    poly = asc_V(eta).poly
    eps = spectral_vector(eta)
    reports = []
    for i in range(1, len(eta) + 1):
        defect = apply_h(poly, i) - poly.scale(eps[i - 1])
        reports.append(OperatorReport("ascV.eigen", len(eta),
                                      f"eta={eta},i={i}", defect))
    return reports


def eigen_replay_U(eta):
    """hat-h_i E^(U)_eta = tilde(eps_i(eta)) E^(U)_eta for every i."""
    eta = comps.as_parts(eta)
    poly = asc_U(eta).poly
    eps = spectral_vector(eta)
    reports = []
    for i in range(1, len(eta) + 1):
        defect = apply_h_hat(poly, i) - poly.scale(tilde_scalar(eps[i - 1]))
        reports.append(OperatorReport("ascU.eigen", len(eta),
                                      f"eta={eta},i={i}", defect))
    return reports


def expansion_structure_report(eta):
    """E^(V)_eta - E_eta lies in the span of E_nu with |nu| < |eta|."""
    eta = comps.as_parts(eta)
    coeffs = expand_in_macdonald_basis(asc_V(eta).poly)
    bad = {nu: c for nu, c in coeffs.items()
           if (nu == eta and c != ONE)
           or (nu != eta and weight(nu) >= weight(eta))}
    defect = MultiPoly(len(eta), bad)
    return OperatorReport("ascV.expansion", len(eta), f"eta={eta}", defect)


def lowering_replay_V(eta):
    """Psi_1 E^V_eta = q^{1-eta_n} (d'_eta/d'_{Psi eta}) E^V_{Psi eta}  (eta_n >= 1),
    and Psi_1^* E^V_eta = a^{-1} t^{n-1} q^{eta_1+1} E^V_{Phi eta}.

    The exponent 1 - eta_n (not eta_n + 1) is forced by the norm recurrence
    these two actions generate and by direct evaluation at eta = (0,1).
    """
    eta = comps.as_parts(eta)
    n = len(eta)
    poly = asc_V(eta).poly
    reports = []
    if eta[-1] >= 1:
        down = psi_map(eta)
        cval = (q ** (1 - eta[-1]) * composition_constants(eta).d_prime
                / composition_constants(down).d_prime)
        defect = apply_lower(poly, "Psi1") - asc_V(down).poly.scale(cval)
        reports.append(OperatorReport("ascV.lower.Psi1", n, f"eta={eta}", defect))
    up = phi_map(eta)
    cval = t ** (n - 1) * q ** (eta[0] + 1) / a
    defect = apply_lower_adjoint(poly) - asc_V(up).poly.scale(cval)
    reports.append(OperatorReport("ascV.raise.Psi1adj", n, f"eta={eta}", defect))
    return reports


def eval_special(eta, point):
    """Evaluate E^(V)_eta at t^{bar delta - n + 1} ("one") or a times it ("a_point").

    Returns the closed form
        (-a)^{|eta|} q^{-a(eta)} t^{l'(eta)-(n-1)|eta|} E_eta(t^{bar delta})
    (with (-1)^{|eta|} instead of (-a)^{|eta|} at the a-point), after checking
    it against direct substitution.
    """
    eta = comps.as_parts(eta)
    n, d = len(eta), weight(eta)
    c = composition_constants(eta)
    principal = t ** c.l_stat * c.e / c.d
    base = tuple(pt * t ** (1 - n) for pt in principal_point(n))
    if point == "one":
        pts = base
        closed = (-a) ** d * q ** (-c.a_stat) * t ** (c.l_prime_stat - (n - 1) * d) * principal
    elif point == "a_point":
        pts = tuple(v * a for v in base)
        closed = (-1) ** d * q ** (-c.a_stat) * t ** (c.l_prime_stat - (n - 1) * d) * principal
    else:
        raise ValueError(f"unknown point {point!r}")
    direct = asc_V(eta).poly.eval_scalars(pts)
    if direct != closed:
        raise IdentityViolationError(
            f"special-point evaluation mismatch for eta={eta} at {point}: "
            f"{direct} vs {closed}")
    return closed


# -- kernels -------------------------------------------------------------


def lift_block(f, block):
    """Embed an n-variable polynomial into 2n variables at block 0 or 1."""
    n = f.n
    pad = (0,) * n
    terms = {}
    for exps, coeff in f.terms.items():
        key = exps + pad if block == 0 else pad + exps
        terms[key] = coeff
    out = MultiPoly.__new__(MultiPoly)
    out.n, out.terms = 2 * n, terms
    return out


def apply_on_block(op, F, n, block):
    """Apply an n-variable operator to one block of a 2n-variable polynomial."""
    groups = {}
    for exps, coeff in F.terms.items():
        mine = exps[:n] if block == 0 else exps[n:]
        other = exps[n:] if block == 0 else exps[:n]
        groups.setdefault(other, {})[mine] = coeff
    total_terms = {}
    for other, terms in sorted(groups.items()):
        image = op(MultiPoly(n, terms))
        for exps, coeff in image.terms.items():
            key = exps + other if block == 0 else other + exps
            prev = total_terms.get(key)
            val = coeff if prev is None else prev + coeff
            if val:
                total_terms[key] = val
            elif key in total_terms:
                del total_terms[key]
    out = MultiPoly.__new__(MultiPoly)
    out.n, out.terms = 2 * n, total_terms
    return out


def block_substitute(F, n, block, point):
    """Substitute scalars for one block; returns an n-variable polynomial."""
    terms = {}
    for exps, coeff in F.terms.items():
        mine = exps[:n] if block == 0 else exps[n:]
        other = exps[n:] if block == 0 else exps[:n]
        c = coeff
        for v, e in zip(point, mine):
            if e:
                c = c * v ** e
        if not c:
            continue
        prev = terms.get(other)
        val = c if prev is None else prev + c
        if val:
            terms[other] = val
        elif other in terms:
            del terms[other]
    return MultiPoly(n, terms)


def restrict_bidegrees(F, n, allowed):
    """Keep only terms whose (block-0 degree, block-1 degree) is in allowed."""
    terms = {e: c for e, c in F.terms.items()
             if (sum(e[:n]), sum(e[n:])) in allowed}
    out = MultiPoly.__new__(MultiPoly)
    out.n, out.terms = 2 * n, terms
    return out


def _kernel_coeff(kind, eta):
    c = composition_constants(eta)
    base = c.d / (c.d_prime * c.e)
    if kind == "KA":
        return base
    if kind == "calKA":
        n, d = len(eta), weight(eta)
        return (q ** c.a_stat * t ** ((n - 1) * d - c.l_prime_stat)) * base
    raise ValueError(f"unknown kernel {kind!r}")


@lru_cache(maxsize=None)
def kernel(kind, d, n):
    """Truncated kernel sum_{|eta| <= d} c_eta E_eta(x) tilde-E_eta(y)."""
    total = MultiPoly.zero(2 * n)
    for deg in range(d + 1):
        for eta in compositions_of(deg, n):
            piece = (lift_block(macdonald_poly(eta), 0)
                     * lift_block(macdonald_poly(eta, "inv"), 1))
            total = total + piece.scale(_kernel_coeff(kind, eta))
    return total


def _product_of_univariate(n, d, coeff_fn):
    """prod_i (sum_{m<=d} coeff_fn(m) x_i^m), truncated to total degree d."""
    out = MultiPoly.constant(n, ONE)
    for i in range(1, n + 1):
        one_var = MultiPoly(n, {
            tuple(m if j == i - 1 else 0 for j in range(n)): coeff_fn(m)
            for m in range(d + 1)})
        out = (out * one_var).truncate(d)
    return out


def euler_inverse_pochhammer(n, d, scale_factor=ONE):
    """prod_i 1/(c x_i; q)_oo truncated: coefficient of x^m is c^m/(q;q)_m."""
    return _product_of_univariate(
        n, d, lambda m: scale_factor ** m / qpochhammer(m))


def euler_pochhammer_neg(n, d, scale_factor=ONE):
    """prod_i (-c x_i; q)_oo truncated: coefficient q^{C(m,2)} c^m/(q;q)_m."""
    return _product_of_univariate(
        n, d, lambda m: q ** (m * (m - 1) // 2) * scale_factor ** m / qpochhammer(m))


def principal_P_closed(lam, n):
    """P_lam(1,t,..,t^{n-1}) = t^{b(lam)} prod (1-q^{a'}t^{n-l'})/(1-q^a t^{l+1})."""
    lam = comps.as_parts(lam)
    out = t ** b_stat(lam)
    for arm, leg, coarm, coleg in node_stats(lam):
        out = out * (ONE - q ** coarm * t ** (n - coleg)) / (ONE - q ** arm * t ** (leg + 1))
    return out


@lru_cache(maxsize=None)
def psi0_kernel(d, n):
    """The 0-psi-0 kernel truncated to |lam| <= d, in 2n variables.

    Coefficient (-1)^{|lam|} q^{b(lam')} / (d'_lam P_lam(t^delta)): the
    conjugate-partition exponent is what the principal specialization
    (x = t^delta collapses the kernel to prod (-t^{n-1}y_i;q)_oo) and the
    symmetrization of the Cauchy kernel both force.
    """
    total = MultiPoly.zero(2 * n)
    for deg in range(d + 1):
        for lam in partitions_of(deg, n):
            P = sym_macdonald(lam)
            cval = ((-1) ** deg * q ** b_stat(conjugate(lam))
                    / (composition_constants(lam).d_prime * principal_P_closed(lam, n)))
            total = total + (lift_block(P, 0) * lift_block(P, 1)).scale(cval)
    return total


@lru_cache(maxsize=None)
def f0_kernel(d, n):
    """The 0-F-0 kernel truncated to |lam| <= d, in 2n variables."""
    total = MultiPoly.zero(2 * n)
    for deg in range(d + 1):
        for lam in partitions_of(deg, n):
            P = sym_macdonald(lam)
            cval = (t ** b_stat(lam)
                    / (composition_constants(lam).d_prime * principal_P_closed(lam, n)))
            total = total + (lift_block(P, 0) * lift_block(P, 1)).scale(cval)
    return total


def kernel_transform_report(d, n):
    """(triste): tilde calK_A(x;y) = K_A(-q y; x), term by term up to degree d."""
    calk = kernel("calKA", d, n)
    lhs = tilde(calk)
    ka = kernel("KA", d, n)
    # K_A(-q y; x): first block of K_A becomes -q y, second becomes x
    swapped = {}
    for exps, coeff in ka.terms.items():
        u, v = exps[:n], exps[n:]
        c = coeff * (-q) ** sum(u)
        key = v + u
        swapped[key] = swapped.get(key, ZERO) + c
    rhs = MultiPoly(2 * n, swapped)
    return OperatorReport("kernel.triste", n, f"deg<={d}", lhs - rhs)


def kernel_property_suite(d, n):
    """Thm-style kernel properties at truncation degree d.

    Degree-preserving identities are compared in full; identities that
    raise the degree on one side are compared on the bidegree range the
    truncation determines completely.
    """
    calk = kernel("calKA", d, n)
    ka = kernel("KA", d, n)
    reports = []
    diag_lower = {(j, j + 1) for j in range(d)}
    diag_upper = {(j + 1, j) for j in range(d)}

    # (a) T_i^{+-1} on x equals tilde T_i^{-+1} on y
    for i in range(1, n):
        for pm in (1, -1):
            lhs = apply_on_block(lambda g: apply_T(g, i, pm), calk, n, 0)
            rhs = apply_on_block(tilde_conj(lambda g: apply_T(g, i, -pm)),
                                 calk, n, 1)
            reports.append(OperatorReport(
                "kernel.a", n, f"i={i},power={pm},deg<={d}", lhs - rhs))

    # (b) Psi_1 on x equals tilde Phi_2 on y  (x-degree down, y-degree up)
    lhs = apply_on_block(lambda g: apply_lower(g, "Psi1"), calk, n, 0)
    rhs = apply_on_block(tilde_conj(lambda g: apply_raise(g, "Phi2")), calk, n, 1)
    reports.append(OperatorReport(
        "kernel.b", n, f"deg<={d}",
        restrict_bidegrees(lhs - rhs, n, diag_lower)))

    # (c) script D_i on x multiplies by y_i
    for i in range(1, n + 1):
        lhs = apply_on_block(lambda g: apply_scriptD(g, i), calk, n, 0)
        rhs = calk * MultiPoly.variable(2 * n, n + i)
        reports.append(OperatorReport(
            "kernel.c", n, f"i={i},deg<={d}",
            restrict_bidegrees(lhs - rhs, n, diag_lower)))

    # classical analogue: D_i on x of K_A multiplies by y_i
    for i in range(1, n + 1):
        lhs = apply_on_block(lambda g: apply_D(g, i), ka, n, 0)
        rhs = ka * MultiPoly.variable(2 * n, n + i)
        reports.append(OperatorReport(
            "kernel.c-old", n, f"i={i},deg<={d}",
            restrict_bidegrees(lhs - rhs, n, diag_lower)))

    # (i.1) tilde script D_i acting on the right block of K_A(z;x)
    for i in range(1, n + 1):
        lhs = apply_on_block(tilde_conj(lambda g: apply_scriptD(g, i)), ka, n, 1)
        rhs = (ka * MultiPoly.variable(2 * n, i)).scale(-1 / q)
        reports.append(OperatorReport(
            "kernel.i1", n, f"i={i},deg<={d}",
            restrict_bidegrees(lhs - rhs, n, diag_upper)))

    # (i.2) tilde D_i acting on the right block of calK_A(x;y); the constant
    # is -1/q: the y-slot enters K_A through the scaling y -> -q y, which
    # twists a degree-lowering operator by one factor of the scale
    for i in range(1, n + 1):
        lhs = apply_on_block(tilde_conj(lambda g: apply_D(g, i)), calk, n, 1)
        rhs = (calk * MultiPoly.variable(2 * n, i)).scale(-1 / q)
        reports.append(OperatorReport(
            "kernel.i2", n, f"i={i},deg<={d}",
            restrict_bidegrees(lhs - rhs, n, diag_upper)))

    # symmetrization: U+ on x gives [n]_t! psi_0(x; -t^{n-1} y)
    lhs = apply_on_block(apply_uplus, calk, n, 0)
    psi0 = psi0_kernel(d, n)
    scaled_terms = {}
    for exps, coeff in psi0.terms.items():
        ydeg = sum(exps[n:])
        scaled_terms[exps] = coeff * (-(t ** (n - 1))) ** ydeg
    rhs = MultiPoly(2 * n, scaled_terms).scale(t_factorial(n))
    reports.append(OperatorReport("kernel.kaneko", n, f"deg<={d}", lhs - rhs))

    # same for the classical kernel: U+ on x of K_A = [n]_t! F_0(x;y)
    lhs = apply_on_block(apply_uplus, ka, n, 0)
    rhs = f0_kernel(d, n).scale(t_factorial(n))
    reports.append(OperatorReport("kernel.ukf", n, f"deg<={d}", lhs - rhs))

    # principal substitutions (n.4) and (n.5)
    pp = principal_point(n)
    lhs = block_substitute(calk, n, 0, pp)
    rhs = euler_pochhammer_neg(n, d, t ** (n - 1))
    reports.append(OperatorReport("kernel.n4", n, f"deg<={d}", lhs - rhs))
    lhs = block_substitute(ka, n, 0, pp)
    rhs = euler_inverse_pochhammer(n, d)
    reports.append(OperatorReport("kernel.n5", n, f"deg<={d}", lhs - rhs))

    reports.append(kernel_transform_report(d, n))
    return reports


# -- generating functions -------------------------------------------------


def a_coefficient(nu):
    """A_nu = q^{a(nu)} t^{(n-1)|nu| - l'(nu)} d_nu/(d'_nu e_nu)."""
    return _kernel_coeff("calKA", comps.as_parts(nu))


def a_coefficient_norm_form(nu):
    """A_nu from the norm data: (a/q)^{|nu|} N_0 / (alpha_nu N_nu)."""
    nu = comps.as_parts(nu)
    n, d = len(nu), weight(nu)
    c = composition_constants(nu)
    ratio = ((a / q * t ** (2 - 2 * n)) ** d * q ** (-2 * c.a_stat)
             * t ** (c.l_stat + c.l_prime_stat) * c.d_prime * c.e / c.d)
    return (a / q) ** d / (alpha_coefficient(nu) * ratio)


def genfun_check(family, d, n):
    """Generating function identities for the V- and U-families.

    V: prod_i rho_a(-z_i)^{-1} calK_A(y;z) = sum_nu A_nu E^V_nu(y) tilde-E_nu(z)
    U: prod_i rho_a(z_i) K_A(z;y^R) = sum_nu d/(d'e) E^U_nu(y) E_nu(z)
    both compared exactly up to z-degree d (z is block 1, y is block 0).
    """
    reports = []
    if family == "V":
        calk = kernel("calKA", d, n)  # blocks (y; z)
        r = rho_series("reciprocal", d)
        series = _product_of_univariate(n, d, lambda m: r[m] * (-1) ** m)
        lhs = calk * lift_block(series, 1)
        rhs = MultiPoly.zero(2 * n)
        for deg in range(d + 1):
            for nu in compositions_of(deg, n):
                piece = (lift_block(asc_V(nu).poly, 0)
                         * lift_block(macdonald_poly(nu, "inv"), 1))
                rhs = rhs + piece.scale(a_coefficient(nu))
        defect = MultiPoly(2 * n, {e: c for e, c in (lhs - rhs).terms.items()
                                   if sum(e[n:]) <= d})
        reports.append(OperatorReport("genfun.V", n, f"deg<={d}", defect))
        bad = [nu for deg in range(d + 1) for nu in compositions_of(deg, n)
               if a_coefficient(nu) != a_coefficient_norm_form(nu)]
        reports.append(OperatorReport(
            "genfun.A-consistency", n, f"deg<={d} {bad if bad else ''}",
            MultiPoly.constant(n, ONE) if bad else MultiPoly.zero(n)))
    elif family == "U":
        # blocks: 0 = y, 1 = z; K_A(z; y^R): E_eta in z, hat E_eta in y
        ka_zy = MultiPoly.zero(2 * n)
        for deg in range(d + 1):
            for eta in compositions_of(deg, n):
                piece = (lift_block(hat(macdonald_poly(eta)), 0)
                         * lift_block(macdonald_poly(eta), 1))
                ka_zy = ka_zy + piece.scale(_kernel_coeff("KA", eta))
        p = rho_series("product", d)
        series = _product_of_univariate(n, d, lambda m: p[m])
        lhs = ka_zy * lift_block(series, 1)
        rhs = MultiPoly.zero(2 * n)
        for deg in range(d + 1):
            for nu in compositions_of(deg, n):
                piece = (lift_block(asc_U(nu).poly, 0)
                         * lift_block(macdonald_poly(nu), 1))
                rhs = rhs + piece.scale(_kernel_coeff("KA", nu))
        defect = MultiPoly(2 * n, {e: c for e, c in (lhs - rhs).terms.items()
                                   if sum(e[n:]) <= d})
        reports.append(OperatorReport("genfun.U", n, f"deg<={d}", defect))
    else:
        raise ValueError(f"unknown family {family!r}")
    return reports


# -- shifted polynomials and q-binomials ----------------------------------


@lru_cache(maxsize=None)
def shifted_G(eta):
    """The inhomogeneous polynomial G_eta(z; q, t), from the V-family at a=0.

    E^V_eta|_{a=0}(x;q,t) = t^{-(n-1)|eta|} G_eta(t^{n-1} x; 1/q, 1/t), so
    G_eta(z;q,t) = t^{-(n-1)|eta|} (tilde E^V_eta|_{a=0})(t^{n-1} z).
    """
    eta = comps.as_parts(eta)
    n, d = len(eta), weight(eta)
    w0 = asc_V(eta).poly.map_coeffs(scalar_set_a_zero)
    tw = tilde(w0)
    c = t ** (n - 1)
    scaled = tw.monomial_map([(c, i + 1) for i in range(n)])
    return scaled.scale(t ** (-(n - 1) * d))


def g_at_zero(eta):
    return shifted_G(eta).coeff((0,) * len(comps.as_parts(eta)))


def vanishing_report(eta):
    """G_eta(t^{bar xi}) = 0 for xi != eta with |xi| <= |eta|; nonzero at eta."""
    eta = comps.as_parts(eta)
    n = len(eta)
    G = shifted_G(eta)
    bad = []
    for deg in range(weight(eta) + 1):
        for xi in compositions_of(deg, n):
            val = G.eval_scalars(spectral_vector(xi))
            if xi == eta:
                if not val:
                    bad.append((xi, "unexpected zero"))
            elif val:
                bad.append((xi, "nonzero"))
    defect = (MultiPoly.constant(n, ONE) if bad else MultiPoly.zero(n))
    return OperatorReport("G.vanishing", n, f"eta={eta} {bad if bad else ''}",
                          defect)


def sahi_evaluation(eta):
    """G_eta(alpha t^{-bar delta}) = alpha^{|eta|} (1/alpha)_{eta+} t^{-(n-1)|eta|} e/d.

    The formal parameter a plays the role of alpha (G_eta is a-free).
    Returns the closed form after checking it against substitution.
    """
    eta = comps.as_parts(eta)
    n, d = len(eta), weight(eta)
    point = tuple(a * t ** (-i) for i in range(n))
    direct = shifted_G(eta).eval_scalars(point)
    lam = partition_of(eta)
    poch = ONE
    for arm, leg, coarm, coleg in node_stats(lam):
        poch = poch * (t ** coleg - q ** coarm / a)
    c = composition_constants(eta)
    closed = a ** d * poch * t ** (-(n - 1) * d) * c.e / c.d
    if direct != closed:
        raise IdentityViolationError(
            f"Sahi evaluation mismatch for eta={eta}: {direct} vs {closed}")
    return closed


@lru_cache(maxsize=None)
def qbinomial(eta, nu):
    """Non-symmetric q-binomial (eta nu), two independent ways.

    Generating-function route: the coefficient of tilde-E_eta in
    tilde-E_nu(x) prod_i 1/(x_i;q)_oo, normalized by t^{l(eta)-l(nu)} d'_nu/d'_eta.
    Interpolation route: G_nu(t^{bar eta}) / G_nu(t^{bar nu}).
    Both must agree exactly.
    """
    eta, nu = comps.as_parts(eta), comps.as_parts(nu)
    n = len(eta)
    if weight(nu) > weight(eta):
        raise ValueError("qbinomial requires |nu| <= |eta|")
    d = weight(eta)
    series = euler_inverse_pochhammer(n, d - weight(nu))
    product = macdonald_poly(nu, "inv") * series
    top = product.homogeneous_components().get(d, MultiPoly.zero(n))
    coeffs = expand_in_macdonald_basis(top, "inv")
    raw = coeffs.get(eta, ZERO)
    c_eta = composition_constants(eta)
    c_nu = composition_constants(nu)
    from_series = raw * t ** (c_nu.l_stat - c_eta.l_stat) * c_eta.d_prime / c_nu.d_prime
    G = shifted_G(nu)
    denom = G.eval_scalars(spectral_vector(nu))
    from_interp = G.eval_scalars(spectral_vector(eta)) / denom
    if from_series != from_interp:
        raise IdentityViolationError(
            f"q-binomial mismatch for ({eta},{nu}): "
            f"{from_series} vs {from_interp}")
    return from_series


def tu1_report(eta):
    """G_eta(x) = sum_nu (eta nu)_{1/q,1/t} (G_eta(0)/G_nu(0)) tilde-E_nu(x)."""
    eta = comps.as_parts(eta)
    n = len(eta)
    G = shifted_G(eta)
    g0 = g_at_zero(eta)
    total = MultiPoly.zero(n)
    for deg in range(weight(eta) + 1):
        for nu in compositions_of(deg, n):
            cval = tilde_scalar(qbinomial(eta, nu)) * g0 / g_at_zero(nu)
            if cval:
                total = total + macdonald_poly(nu, "inv").scale(cval)
    return OperatorReport("G.tu1", n, f"eta={eta}", G - total)


# -- symmetric binomials and sum rules ------------------------------------


def monomial_symmetric(lam, n):
    """m_lambda: the sum of all distinct permutations of the padded exponent."""
    lam = tuple(lam) + (0,) * (n - len(lam))
    terms = {exps: ONE for exps in set(_perms(lam))}
    return MultiPoly(n, terms)


def expand_symmetric_in_P(f, n):
    """Coefficients of a symmetric polynomial in the P_lambda basis, per degree.

    The reconstruction is verified, so a non-symmetric input cannot slip
    through.  Returns dict lam -> Scalar.
    """
    out = {}
    recon = MultiPoly.zero(n)
    for deg, comp in f.homogeneous_components().items():
        lams = partitions_of(deg, n)
        mat = [[sym_macdonald(kap).coeff(mu) for kap in lams] for mu in lams]
        rhs = [comp.coeff(mu) for mu in lams]
        sol = solve_unique(mat, rhs)
        for lam, cval in zip(lams, sol):
            if cval:
                out[lam] = cval
                recon = recon + sym_macdonald(lam).scale(cval)
    if recon != f:
        raise IdentityViolationError("input not in the symmetric P-span")
    return out


@lru_cache(maxsize=None)
def sym_qbinomial(kappa, mu, n):
    """Symmetric binomial (kappa mu): coefficient of P_kappa in
    P_mu(x) prod_i 1/(x_i;q)_oo, normalized by t^{b(kappa)-b(mu)} d'_mu/d'_kappa."""
    kappa = comps.as_parts(kappa) + (0,) * (n - len(kappa))
    mu = comps.as_parts(mu) + (0,) * (n - len(mu))
    d = weight(kappa)
    series = euler_inverse_pochhammer(n, d - weight(mu))
    product = sym_macdonald(mu) * series
    top = product.homogeneous_components().get(d, MultiPoly.zero(n))
    coeffs = expand_symmetric_in_P(top, n)
    raw = coeffs.get(kappa, ZERO)
    cb = b_stat(kappa) - b_stat(mu)
    ck = composition_constants(kappa).d_prime
    cm = composition_constants(mu).d_prime
    return raw * t ** (-cb) * ck / cm


def binomial_sum_rules(kappa, mu, n):
    """(tu.5) and (tu.6): non-symmetric binomials summed over orbits.

    For every eta with eta+ = kappa:
        sum_{nu : nu+ = mu} (eta nu) = (kappa mu)
    and for every nu with nu+ = mu:
        (d'_k/d'_m)(P_m(td)/P_k(td)) (d'_nu/E_nu(td))
            * sum_{eta : eta+ = kappa} (eta nu) E_eta(td)/d'_eta = (kappa mu).

    The principal-specialization ratio enters as P_mu/P_kappa: deriving the
    rule by symmetrizing the binomial generating function cancels every
    t-power exactly in that orientation (and the other orientation already
    fails at kappa=(1,0), mu=nu=0 by a factor (1+t)^2).
    """
    kappa = comps.as_parts(kappa) + (0,) * (n - len(comps.as_parts(kappa)))
    mu = comps.as_parts(mu) + (0,) * (n - len(comps.as_parts(mu)))
    sym = sym_qbinomial(kappa, mu, n)
    pp = principal_point(n)
    reports = []

    etas = [c for c in compositions_of(weight(kappa), n) if partition_of(c) == kappa]
    nus = [c for c in compositions_of(weight(mu), n) if partition_of(c) == mu]

    for eta in etas:
        total = sum((qbinomial(eta, nu) for nu in nus), ZERO)
        defect = (MultiPoly.constant(n, total - sym) if total != sym
                  else MultiPoly.zero(n))
        reports.append(OperatorReport("binom.tu5", n,
                                      f"kappa={kappa},mu={mu},eta={eta}", defect))

    dk = composition_constants(kappa).d_prime
    dm = composition_constants(mu).d_prime
    p_k = sym_macdonald(kappa).eval_scalars(pp)
    p_m = sym_macdonald(mu).eval_scalars(pp)
    for nu in nus:
        dn = composition_constants(nu).d_prime
        e_nu = macdonald_poly(nu).eval_scalars(pp)
        acc = ZERO
        for eta in etas:
            acc = acc + (qbinomial(eta, nu)
                         * macdonald_poly(eta).eval_scalars(pp)
                         / composition_constants(eta).d_prime)
        val = (dk / dm) * (p_m / p_k) * (dn / e_nu) * acc
        defect = (MultiPoly.constant(n, val - sym) if val != sym
                  else MultiPoly.zero(n))
        reports.append(OperatorReport("binom.tu6", n,
                                      f"kappa={kappa},mu={mu},nu={nu}", defect))
    return reports


# -- symmetric reduction ---------------------------------------------------


def a_eta_constant(eta):
    """a_eta = [n]_t! t^{l(eta)} e_eta / (P_{eta+}(t^delta) d_eta)."""
    eta = comps.as_parts(eta)
    n = len(eta)
    c = composition_constants(eta)
    lam = partition_of(eta)
    p_principal = sym_macdonald(lam).eval_scalars(principal_point(n))
    return t_factorial(n) * t ** c.l_stat * c.e / (p_principal * c.d)


@lru_cache(maxsize=None)
def sym_asc_V(lam):
    """V^{(a)}_lambda := U+ E^V_eta / a_eta, independent of the orbit member."""
    lam = comps.as_parts(lam)
    out = None
    for eta in compositions_of(weight(lam), len(lam)):
        if partition_of(eta) != lam:
            continue
        cand = apply_uplus(asc_V(eta).poly).scale(1 / a_eta_constant(eta))
        if out is None:
            out = cand
        elif out != cand:
            raise IdentityViolationError(
                f"symmetric V differs across the orbit of {lam} at {eta}")
    return out


def sym_asc_relation(eta):
    """(s.1)-style checks: symmetry, orbit independence, leading P-term,
    the hat-reflection to the symmetric U-family, and the generating
    function extraction of V_lambda."""
    eta = comps.as_parts(eta)
    n, d = len(eta), weight(eta)
    lam = partition_of(eta)
    V = sym_asc_V(lam)
    reports = []
    defect = MultiPoly.zero(n)
    for i in range(1, n):
        defect = defect + (apply_s(V, i) - V)
    reports.append(OperatorReport("symASC.symmetric", n, f"lam={lam}", defect))

    top = V.homogeneous_components().get(d, MultiPoly.zero(n))
    coeffs = expand_symmetric_in_P(top, n)
    ok = coeffs == {lam: ONE}
    reports.append(OperatorReport(
        "symASC.leading", n, f"lam={lam}",
        MultiPoly.zero(n) if ok else MultiPoly.constant(n, ONE)))

    # U-family symmetrization transports through hat: the hat-conjugated
    # symmetrizer sends E^U_eta to tilde(a_eta) U_lambda with U_lambda =
    # tilde(V_lambda).  (The plain symmetrizer is not orbit-consistent on
    # the U-family: U+ E^U_(0,1) and U+ E^U_(1,0) are not proportional.)
    U_sym = hat(apply_uplus(hat(asc_U(eta).poly)))
    U_sym = U_sym.scale(1 / tilde_scalar(a_eta_constant(eta)))
    reports.append(OperatorReport(
        "symASC.U-hat", n, f"eta={eta}", U_sym - tilde(V)))

    # generating-function extraction of V_lambda
    reports.append(OperatorReport(
        "symASC.genfun", n, f"lam={lam}", V - sym_asc_V_from_genfun(lam, n)))
    return reports


@lru_cache(maxsize=None)
def sym_asc_V_from_genfun(lam, n):
    """V_lambda extracted from prod_i rho_a(t^{1-n}x_i)^{-1} psi_0(x;y).

    The coefficient of P_lambda(x) equals
    (-1)^{|lam|} q^{b(lam')} V_lambda(y) / (d'_lam P_lam(t^delta)).
    """
    lam = comps.as_parts(lam)
    d = weight(lam)
    r = rho_series("reciprocal", d)
    series = _product_of_univariate(n, d, lambda m: r[m] * t ** ((1 - n) * m))
    F = psi0_kernel(d, n) * lift_block(series, 0)
    # collect x-degree-d part, grouped by y-exponent
    pieces = {}
    for exps, coeff in F.terms.items():
        if sum(exps[:n]) != d:
            continue
        pieces.setdefault(exps[n:], {})[exps[:n]] = coeff
    lams = partitions_of(d, n)
    mat = [[sym_macdonald(kap).coeff(mu) for kap in lams] for mu in lams]
    target = MultiPoly.zero(n)
    for yexp, terms in sorted(pieces.items()):
        rhs = [terms.get(mu, ZERO) for mu in lams]
        sol = solve_unique(mat, rhs)
        cval = dict(zip(lams, sol)).get(lam, ZERO)
        if cval:
            target = target + MultiPoly.monomial(n, yexp, cval)
    c = ((-1) ** d * q ** b_stat(conjugate(lam))
         / (composition_constants(lam).d_prime * principal_P_closed(lam, n)))
    return target.scale(1 / c)


# -- Hamiltonian comparison -------------------------------------------------


def _hamiltonian(f):
    """The symmetric-family eigenoperator built from Y^{-1} and D."""
    n = f.n
    out = MultiPoly.zero(n)
    for i in range(1, n + 1):
        yi = apply_Y(f, i, -1)
        out = out + yi.scale(t ** (1 - n))
        dyi = apply_D(yi, i)
        out = out - dyi.scale((1 + a) * t ** (1 - i))
        out = out + apply_D(dyi, i).scale(a * t ** (1 - i))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out + apply_D(apply_D(apply_Y(f, i, -1), i), j).scale(
                a * (1 - 1 / t) * t ** (1 - i))
    return out


def hamiltonian_comparison(n, d):
    """sum_i h_i = t^{1-n} tilde(H) on symmetric polynomials of degree <= d,
    plus the three component identities behind it."""
    span = []
    for deg in range(d + 1):
        for lam in partitions_of(deg, n):
            span.append(monomial_symmetric(lam, n))
    reports = []

    def chk(identity, lhs, rhs):
        for f in span:
            defect = lhs(f) - rhs(f)
            if defect:
                reports.append(OperatorReport(identity, n, f"deg<={d}",
                                              defect, str(f)))
                return
        reports.append(OperatorReport(identity, n, f"deg<={d}",
                                      MultiPoly.zero(n)))

    def sum_h(f):
        out = MultiPoly.zero(n)
        for i in range(1, n + 1):
            out = out + apply_h(f, i)
        return out

    chk("hamiltonian.comparison", sum_h,
        lambda f: tilde(_hamiltonian(tilde(f))).scale(t ** (1 - n)))

    def tY(f, i):
        return tilde(apply_Y(tilde(f), i, -1))

    def tD(f, i):
        return tilde(apply_D(tilde(f), i))

    chk("hamiltonian.partI",
        lambda f: sum((tY(f, i) for i in range(1, n + 1)), MultiPoly.zero(n)),
        lambda f: sum((apply_Y(f, i) for i in range(1, n + 1)),
                      MultiPoly.zero(n)))

    chk("hamiltonian.partII",
        lambda f: sum((tD(tY(f, i), i).scale(-(t ** (i - 1)))
                       for i in range(1, n + 1)), MultiPoly.zero(n)),
        lambda f: sum((apply_D(f, i) for i in range(1, n + 1)),
                      MultiPoly.zero(n)))

    def lhs3(f):
        out = MultiPoly.zero(n)
        for i in range(1, n + 1):
            out = out + tD(tD(tY(f, i), i), i).scale(t ** (i - 1))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                out = out + tD(tD(tY(f, i), i), j).scale((1 - t) * t ** (i - 1))
        return out

    def rhs3(f):
        out = MultiPoly.zero(n)
        for i in range(1, n + 1):
            out = out + apply_D(apply_Y(apply_D(f, i), i, -1), i)
        return out.scale(t ** (1 - n))

    chk("hamiltonian.partIII", lhs3, rhs3)
    return reports
