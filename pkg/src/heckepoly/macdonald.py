"""Non-symmetric Macdonald polynomials and replay of their basic identities.

E_eta is constructed from its definition: the joint eigenfunction of the
commuting Cherednik operators Y_i on the degree shell |nu| = |eta|, with
unit coefficient on x^eta and support below eta in the composition order.
The raising recursions, the symmetrizer action, principal specializations
and the operator-substitution theorem (E with the raising operators e_i
plugged in) are all replays checked against this single constructor.
"""

from functools import lru_cache

from . import compositions as comps
from .compositions import (alpha_coefficient, comp_less, composition_constants,
                           compositions_of, partition_of, phi_map, psi_map,
                           spectral_vector, weight)
from .linalg import nullspace, solve_unique
from .operators import (OperatorReport, apply_e, apply_lower, apply_raise,
                        apply_uplus, apply_Y, check_identity, t_factorial)
from .polyring import MultiPoly, tilde
from .scalars import ONE, Scalar, q, t, tilde_scalar


class IdentityViolationError(AssertionError):
    """An identity the implementation relies on failed exactly."""


class DegenerateEigenspaceError(RuntimeError):
    """The joint eigenspace is not one-dimensional (internal bug for formal q,t)."""


@lru_cache(maxsize=None)
def _shell(n, d):
    """Monomial shell of degree d, in a linear extension of the composition order."""
    items = list(compositions_of(d, n))
    ordered = []
    while items:
        # deterministic: smallest (by tuple) among the minimal elements
        minimal = [x for x in items
                   if not any(y != x and comp_less(y, x) for y in items)]
        pick = min(minimal)
        ordered.append(pick)
        items.remove(pick)
    return tuple(ordered)


@lru_cache(maxsize=None)
def _y_matrix(n, d, i):
    """Sparse rows of Y_i on the shell: row nu -> {mu: coeff} of Y_i x^nu."""
    shell = _shell(n, d)
    rows = {}
    for nu in shell:
        img = apply_Y(MultiPoly.monomial(n, nu), i)
        rows[nu] = dict(img.terms)
    return rows


@lru_cache(maxsize=None)
def nonsym_macdonald(eta, orientation="qt", method="triangular"):
    """The non-symmetric Macdonald polynomial E_eta.

    orientation "qt" gives E_eta(x; q, t); "inv" gives E_eta(x; 1/q, 1/t)
    (every coefficient passed through the tilde involution).

    The coefficients are obtained by back-substitution down the composition
    order, using that each Y_i is triangular on the degree shell; the full
    joint eigen-equations are then certified exactly, so a triangularity
    failure cannot pass silently.  method="nullspace" solves the stacked
    eigensystem by fraction-free elimination instead (slower; kept as an
    independent cross-check).
    """
    eta = comps.as_parts(eta)
    if orientation == "inv":
        rec = nonsym_macdonald(eta, "qt", method)
        return MacdonaldRecord(eta, "inv", tilde(rec.poly),
                               tuple(tilde_scalar(s) for s in rec.spectral))
    if orientation != "qt":
        raise ValueError(f"unknown orientation {orientation!r}")

    n, d = len(eta), weight(eta)
    shell = _shell(n, d)
    spectral = spectral_vector(eta)
    mats = [_y_matrix(n, d, i) for i in range(1, n + 1)]

    if method == "nullspace":
        coeffs = _solve_by_nullspace(eta, shell, spectral, mats)
    elif method == "triangular":
        coeffs = _solve_by_back_substitution(eta, shell, spectral, mats)
    else:
        raise ValueError(f"unknown method {method!r}")

    poly = MultiPoly(n, coeffs)
    for nu in coeffs:
        if nu != eta and not comp_less(nu, eta):
            raise IdentityViolationError(
                f"support of E_{eta} contains {nu}, not below eta")
    for i in range(n):
        rows = mats[i]
        lam = spectral[i]
        image = {}
        for nu, c in coeffs.items():
            for mu, m in rows[nu].items():
                image[mu] = image.get(mu, 0) + m * c
        for mu in set(image) | set(coeffs):
            if image.get(mu, 0) != lam * coeffs.get(mu, 0):
                raise DegenerateEigenspaceError(
                    f"eigen-equation Y_{i+1} fails for eta={eta} at {mu}")
    return MacdonaldRecord(eta, "qt", poly, spectral)


def _solve_by_back_substitution(eta, shell, spectral, mats):
    """c_mu = -(sum_{nu>mu} (Y_i)_{mu,nu} c_nu) / (eps_i(mu)-eps_i(eta)), c_eta=1."""
    n = len(eta)
    pos = {nu: k for k, nu in enumerate(shell)}
    down = [nu for nu in shell if nu == eta or comp_less(nu, eta)]
    coeffs = {eta: ONE}
    for mu in sorted(down, key=lambda nu: -pos[nu]):
        if mu == eta:
            continue
        eps_mu = spectral_vector(mu)
        i = next(k for k in range(n) if eps_mu[k] != spectral[k])
        acc = 0
        for nu, c in coeffs.items():
            entry = mats[i][nu].get(mu)
            if entry is not None and pos[nu] > pos[mu]:
                acc = entry * c if acc == 0 else acc + entry * c
        if acc != 0:
            coeffs[mu] = acc / (spectral[i] - eps_mu[i])
    return coeffs


def _solve_by_nullspace(eta, shell, spectral, mats):
    size = len(shell)
    pos = {nu: k for k, nu in enumerate(shell)}
    rows = []
    for i in range(len(eta)):
        lam = spectral[i]
        dense = [[0] * size for _ in range(size)]
        for nu in shell:
            for mu, val in mats[i][nu].items():
                dense[pos[mu]][pos[nu]] = val
        for r in range(size):
            dense[r][r] = dense[r][r] - lam
            rows.append(dense[r])
    basis = nullspace(rows, size)
    if len(basis) != 1:
        raise DegenerateEigenspaceError(
            f"joint eigenspace for eta={eta} has dimension {len(basis)}")
    vec = basis[0]
    lead = vec[pos[eta]]
    if not lead:
        raise DegenerateEigenspaceError(
            f"eigenvector for eta={eta} has no x^eta component")
    return {nu: c / lead for nu, c in zip(shell, vec) if c}


class MacdonaldRecord:
    """E_eta together with its index data and joint eigenvalues."""

    __slots__ = ("eta", "orientation", "poly", "spectral")

    def __init__(self, eta, orientation, poly, spectral):
        self.eta = eta
        self.orientation = orientation
        self.poly = poly
        self.spectral = spectral

    def __repr__(self):
        return f"MacdonaldRecord(eta={self.eta}, {self.orientation}: {self.poly})"


def macdonald_poly(eta, orientation="qt"):
    return nonsym_macdonald(tuple(eta), orientation).poly


def expand_in_macdonald_basis(f, orientation="qt"):
    """Expansion coefficients of f in {E_nu}, degree shell by degree shell.

    Returns a dict mapping compositions nu to scalars; exact, via a linear
    solve against the triangular basis on each shell.
    """
    out = {}
    for d, comp in f.homogeneous_components().items():
        shell = _shell(f.n, d)
        index = {nu: k for k, nu in enumerate(shell)}
        size = len(shell)
        cols = []
        for nu in shell:
            rec = nonsym_macdonald(nu, orientation)
            col = [rec.poly.coeff(mu) for mu in shell]
            cols.append(col)
        rows = [[cols[c][r] for c in range(size)] for r in range(size)]
        rhs = [comp.coeff(mu) for mu in shell]
        sol = solve_unique(rows, rhs)
        for nu, cval in zip(shell, sol):
            if cval:
                out[nu] = cval
    return out


def sym_macdonald(lam):
    """Symmetric Macdonald polynomial P_lambda = sum (d'_lambda/d'_eta) E_eta."""
    lam = comps.as_parts(lam)
    if partition_of(lam) != lam:
        raise ValueError(f"{lam} is not a partition")
    n = len(lam)
    dpl = composition_constants(lam).d_prime
    total = MultiPoly.zero(n)
    for eta in compositions_of(weight(lam), n):
        if partition_of(eta) == lam:
            c = dpl / composition_constants(eta).d_prime
            total = total + macdonald_poly(eta).scale(c)
    return total


def principal_point(n):
    """The point t^{bar delta} = (1, t, ..., t^{n-1})."""
    return tuple(t ** i for i in range(n))


def principal_specialization(eta):
    """E_eta(1, t, .., t^{n-1}) = t^{l(eta)} e_eta / d_eta, checked exactly."""
    eta = comps.as_parts(eta)
    c = composition_constants(eta)
    closed = t ** c.l_stat * c.e / c.d
    direct = macdonald_poly(eta).eval_scalars(principal_point(len(eta)))
    if direct != closed:
        raise IdentityViolationError(
            f"principal specialization mismatch for eta={eta}: "
            f"substitution {direct} vs closed form {closed}")
    return closed


def raising_lowering_replay(eta):
    """Replay the four raising/lowering actions on E_eta.

    Phi_1 E_eta = q^{eta_1} E_{Phi eta}
    Phi_2 E_eta = t^{-#{i>=2 : eta_i <= eta_1}} E_{Phi eta}
    Psi_1 E_eta = q^{1-eta_n} (1 - t^{n-1} eps_n(eta)) E_{Psi eta}   (eta_n >= 1)
    Psi_2 E_eta = t^{#{i<n : eta_i < eta_n}} (1 - t^{n-1} eps_n(eta)) E_{Psi eta}
    """
    eta = comps.as_parts(eta)
    n = len(eta)
    E = macdonald_poly(eta)
    reports = []

    up = phi_map(eta)
    E_up = macdonald_poly(up)
    c1 = q ** eta[0]
    reports.append(OperatorReport(
        "raise.Phi1", n, f"eta={eta}",
        apply_raise(E, "Phi1") - E_up.scale(c1)))
    count = sum(1 for i in range(1, n) if eta[i] <= eta[0])
    c2 = t ** (-count)
    reports.append(OperatorReport(
        "raise.Phi2", n, f"eta={eta}",
        apply_raise(E, "Phi2") - E_up.scale(c2)))

    if eta[-1] >= 1:
        down = psi_map(eta)
        E_down = macdonald_poly(down)
        eps_n = spectral_vector(eta)[n - 1]
        shared = ONE - t ** (n - 1) * eps_n
        c3 = q ** (1 - eta[-1]) * shared
        reports.append(OperatorReport(
            "lower.Psi1", n, f"eta={eta}",
            apply_lower(E, "Psi1") - E_down.scale(c3)))
        c4 = t ** sum(1 for i in range(n - 1) if eta[i] < eta[-1]) * shared
        reports.append(OperatorReport(
            "lower.Psi2", n, f"eta={eta}",
            apply_lower(E, "Psi2") - E_down.scale(c4)))
    return reports


def uplus_action_replay(eta):
    """U+ E_eta = [n]_t! t^{l(eta)} e_eta / (P_lam(t^delta) d_eta) P_lam."""
    eta = comps.as_parts(eta)
    n = len(eta)
    lam = partition_of(eta)
    c = composition_constants(eta)
    P = sym_macdonald(lam)
    p_principal = P.eval_scalars(principal_point(n))
    factor = t_factorial(n) * t ** c.l_stat * c.e / (p_principal * c.d)
    defect = apply_uplus(macdonald_poly(eta)) - P.scale(factor)
    return OperatorReport("uplus.action", n, f"eta={eta}", defect)


def operator_substitution(coeffs_poly, op_factory, n, seed=None):
    """Evaluate a polynomial at commuting operators, applied to 1.

    Each monomial x^nu with coefficient c becomes
    c * op_1^{nu_1}( op_2^{nu_2}( ... op_n^{nu_n}(1) ... )).
    """
    base = seed if seed is not None else MultiPoly.constant(n, ONE)
    total = MultiPoly.zero(n)
    for exps, coeff in coeffs_poly.sorted_terms():
        cur = base
        for i in range(n, 0, -1):
            for _ in range(exps[i - 1]):
                cur = op_factory(cur, i)
        total = total + cur.scale(coeff)
    return total


def thm11_replay(eta):
    """tilde-E_eta evaluated at the raising operators e_i equals alpha_eta E_eta."""
    eta = comps.as_parts(eta)
    n = len(eta)
    lhs = operator_substitution(macdonald_poly(eta, "inv"), apply_e, n)
    rhs = macdonald_poly(eta).scale(alpha_coefficient(eta))
    return OperatorReport("thm.operator-substitution", n, f"eta={eta}", lhs - rhs)


def eigen_replay(eta):
    """Y_i E_eta = eps_i(eta) E_eta for every i, exactly."""
    eta = comps.as_parts(eta)
    rec = nonsym_macdonald(eta)
    reports = []
    for i in range(1, len(eta) + 1):
        defect = apply_Y(rec.poly, i) - rec.poly.scale(rec.spectral[i - 1])
        reports.append(OperatorReport("eigen.Y", len(eta), f"eta={eta},i={i}", defect))
    return reports
