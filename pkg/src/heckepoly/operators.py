"""Hecke-algebra operators as exact endomorphisms of MultiPoly.

Operators are realized as pure functions, not symbolic words: a relation
is verified by applying both sides to a spanning set of monomials and
checking that the defect polynomial vanishes exactly.  Composition words
are written in the same left-to-right order as the defining formulas and
applied rightmost-first through compose_word / word_apply.

Conventions:

- T_i (1 <= i <= n-1) is the divided-difference form
      T_i f = t f + (t x_i - x_{i+1}) (s_i f - f) / (x_i - x_{i+1}),
  an exact division;  T_i^{-1} = t^{-1} (T_i + 1 - t).
- T_0 is defined as omega T_1 omega^{-1}; the substitution form with
      s_0 f = f(q x_n, x_2, ..., x_{n-1}, x_1/q)
  is kept separately as a consistency probe.
- omega f = f(q x_n, x_1, ..., x_{n-1}); for n = 1 it degenerates to
  x -> qx, making Y_1 the q-shift and D_1 f = (f - f(qx))/x.
- tilde-conjugation of an operator inverts q,t in coefficients before and
  after; hat-conjugation additionally reverses the variables.
"""

from dataclasses import dataclass
from itertools import permutations

from .polyring import MultiPoly, exact_divide, hat, permute_vars, tilde
from .scalars import ONE, ZERO, Scalar, a, q, scalar, t


def word_apply(ops, f):
    """Apply a left-to-right operator word to f (rightmost acts first)."""
    for op in reversed(ops):
        f = op(f)
    return f


def compose_word(ops):
    ops = list(ops)
    return lambda f: word_apply(ops, f)


def apply_s(f, i):
    """Transposition s_i of x_i, x_{i+1}."""
    sigma = list(range(1, f.n + 1))
    sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
    return permute_vars(f, sigma)


def apply_omega(f, power=1):
    """The rotation omega (power +1) or its inverse (power -1)."""
    n = f.n
    if n == 1:
        images = [(q if power > 0 else 1 / q, 1)]
        return f.monomial_map(images)
    if power > 0:
        images = [(q, n)] + [(ONE, j) for j in range(1, n)]
    else:
        images = [(ONE, j + 1) for j in range(1, n)] + [(1 / q, 1)]
    return f.monomial_map(images)


def _divided_difference(f, s_f, factor, divisor):
    moved = s_f - f
    if not moved:
        return f.scale(t)
    return f.scale(t) + factor * exact_divide(moved, divisor)


def apply_T(f, i, power=1):
    """Demazure-Lustig generator T_i (i = 0 handled via omega T_1 omega^{-1})."""
    n = f.n
    if i == 0:
        if n < 2:
            raise ValueError("T_0 requires n >= 2")
        return apply_omega(apply_T(apply_omega(f, -1), 1, power), 1)
    if not 1 <= i <= n - 1:
        raise ValueError(f"T index {i} out of range for n={n}")
    if power == 1:
        xi = MultiPoly.variable(n, i)
        xi1 = MultiPoly.variable(n, i + 1)
        return _divided_difference(f, apply_s(f, i), xi.scale(t) - xi1, xi - xi1)
    if power == -1:
        return (apply_T(f, i, 1) + f.scale(ONE - t)).scale(1 / t)
    raise ValueError(f"unsupported power {power}")


def apply_T0_direct(f):
    """T_0 from the substitution s_0 f = f(q x_n, x_2, .., x_{n-1}, x_1/q)."""
    n = f.n
    if n < 2:
        raise ValueError("T_0 requires n >= 2")
    images = [(ONE, j) for j in range(1, n + 1)]
    images[0] = (q, n)
    images[n - 1] = (1 / q, 1)
    s0_f = f.monomial_map(images)
    xn = MultiPoly.variable(n, n)
    x1 = MultiPoly.variable(n, 1)
    return _divided_difference(f, s0_f, xn.scale(q * t) - x1, xn.scale(q) - x1)


def T(i, power=1):
    return lambda f: apply_T(f, i, power)


def omega(power=1):
    return lambda f: apply_omega(f, power)


def xvar(i):
    return lambda f: MultiPoly.variable(f.n, i) * f


def scaled(c):
    c = scalar(c)
    return lambda f: f.scale(c)


def tilde_conj(op):
    return lambda f: tilde(op(tilde(f)))


def hat_conj(op):
    return lambda f: hat(op(hat(f)))


def apply_Y(f, i, power=1):
    """Cherednik operator Y_i = t^{i-n} T_i..T_{n-1} omega T_1^{-1}..T_{i-1}^{-1}."""
    n = f.n
    if not 1 <= i <= n:
        raise ValueError(f"Y index {i} out of range for n={n}")
    if power == 1:
        word = ([T(j) for j in range(i, n)] + [omega()]
                + [T(j, -1) for j in range(1, i)])
        return word_apply(word, f).scale(t ** (i - n))
    if power == -1:
        word = ([T(j) for j in range(i - 1, 0, -1)] + [omega(-1)]
                + [T(j, -1) for j in range(n - 1, i - 1, -1)])
        return word_apply(word, f).scale(t ** (n - i))
    raise ValueError(f"unsupported power {power}")


def Y(i, power=1):
    return lambda f: apply_Y(f, i, power)


def apply_D(f, i):
    """q-Dunkl operator D_i; lowers total degree by one."""
    n = f.n
    word = ([T(j, -1) for j in range(i, n)] + [omega()]
            + [T(j, -1) for j in range(1, i)])
    inner = word_apply(word, f).scale(t ** (n - 1))
    return exact_divide(f - inner, MultiPoly.variable(n, i))


def D(i):
    return lambda f: apply_D(f, i)


def apply_scriptD(f, i, form=2):
    """The q-Dunkl variant; all three defining forms are implemented.

    form 1:  -q * hat(D_{n+1-i})            (hat-conjugation)
    form 2:  -q x_i^{-1} (1 - t^{1-n} T_{i-1}..T_1 omega^{-1} T_{n-1}..T_i)
    form 3:   q t^{-2n+i+1} D_i Y_i^{-1} T_i..T_{n-1} T_{n-1}..T_i
    """
    n = f.n
    if form == 1:
        return hat_conj(D(n + 1 - i))(f).scale(-q)
    if form == 2:
        word = ([T(j) for j in range(i - 1, 0, -1)] + [omega(-1)]
                + [T(j) for j in range(n - 1, i - 1, -1)])
        inner = word_apply(word, f).scale(t ** (1 - n))
        return exact_divide(f - inner, MultiPoly.variable(n, i)).scale(-q)
    if form == 3:
        word = ([D(i), Y(i, -1)] + [T(j) for j in range(i, n)]
                + [T(j) for j in range(n - 1, i - 1, -1)])
        return word_apply(word, f).scale(q * t ** (-2 * n + i + 1))
    raise ValueError(f"unknown form {form}")


def scriptD(i):
    return lambda f: apply_scriptD(f, i)


def apply_e(f, i):
    """Degree-raising operator e_i = t^{i-1} T_i..T_{n-1} x_n omega T_1^{-1}..T_{i-1}^{-1}."""
    n = f.n
    word = ([T(j) for j in range(i, n)] + [xvar(n), omega()]
            + [T(j, -1) for j in range(1, i)])
    return word_apply(word, f).scale(t ** (i - 1))


def e_op(i):
    return lambda f: apply_e(f, i)


def apply_bigE(f, i):
    """E_i = D_i + (1 + 1/a) t^{n-1} Y_i - (1/a) e_i."""
    n = f.n
    return (apply_D(f, i)
            + apply_Y(f, i).scale((1 + 1 / a) * t ** (n - 1))
            - apply_e(f, i).scale(1 / a))


def bigE(i):
    return lambda f: apply_bigE(f, i)


def apply_h(f, i):
    """Eigenoperator h_i = Y_i + (1+a) t^{1-n} D_i + a t^{2-2n} D_i Y_i^{-1} D_i."""
    n = f.n
    out = apply_Y(f, i)
    df = apply_D(f, i)
    out = out + df.scale((1 + a) * t ** (1 - n))
    out = out + apply_D(apply_Y(df, i, -1), i).scale(a * t ** (2 - 2 * n))
    return out


def apply_h_hat(f, i):
    """h_i conjugated by the hat involution."""
    return hat_conj(lambda g: apply_h(g, i))(f)


def h_op(i):
    return lambda f: apply_h(f, i)


def apply_raise(f, which):
    """Raising operators: Phi1 = x_n omega, Phi2 = x_n T_{n-1}^{-1}..T_1^{-1}."""
    n = f.n
    if which == "Phi1":
        return word_apply([xvar(n), omega()], f)
    if which == "Phi2":
        return word_apply([xvar(n)] + [T(j, -1) for j in range(n - 1, 0, -1)], f)
    raise ValueError(f"unknown raising operator {which!r}")


def apply_lower(f, which):
    """Lowering operators: Psi1 = omega^{-1} D_n, Psi2 = T_1..T_{n-1} D_n."""
    n = f.n
    if which == "Psi1":
        return word_apply([omega(-1), D(n)], f)
    if which == "Psi2":
        return word_apply([T(j) for j in range(1, n)] + [D(n)], f)
    raise ValueError(f"unknown lowering operator {which!r}")


def apply_lower_adjoint(f):
    """Psi_1^* = -q E_n T_{n-1} .. T_1 (the adjoint raising operator)."""
    n = f.n
    word = [bigE(n)] + [T(j) for j in range(n - 1, 0, -1)]
    return word_apply(word, f).scale(-q)


def _reduced_word(perm):
    """A reduced word (as s-indices) for the permutation in one-line notation."""
    arr = list(perm)
    swaps = []
    changed = True
    while changed:
        changed = False
        for i in range(len(arr) - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                swaps.append(i + 1)
                changed = True
    return swaps[::-1]


def t_factorial(n):
    """[n]_t! = prod_{i<=n} (1 + t + .. + t^{i-1})."""
    out = ONE
    for i in range(1, n + 1):
        out = out * sum((t ** j for j in range(i)), ZERO)
    return out


UPLUS_MAX_N = 5


def apply_uplus(f):
    """Symmetrizer U+ = sum over permutations of T_sigma."""
    n = f.n
    if n > UPLUS_MAX_N:
        raise ValueError(f"U+ supports n <= {UPLUS_MAX_N}")
    total = MultiPoly.zero(n)
    for perm in permutations(range(1, n + 1)):
        word = [T(i) for i in _reduced_word(perm)]
        total = total + word_apply(word, f)
    return total


def uplus(f):
    return apply_uplus(f)


# -- verification suites -----------------------------------------------


@dataclass
class OperatorReport:
    """Outcome of replaying one identity over a spanning set of inputs."""

    identity: str
    n: int
    instance: str
    defect: MultiPoly
    failing_input: str = ""

    @property
    def passed(self):
        return not self.defect

    def to_json_dict(self):
        return {
            "identity": self.identity,
            "n": self.n,
            "instance": self.instance,
            "pass": self.passed,
            "defect_terms": [
                {"exp": list(exps), "coeff": str(coeff)}
                for exps, coeff in self.defect.sorted_terms()
            ],
            **({"failing_input": self.failing_input} if self.failing_input else {}),
        }


def monomial_span(n, max_degree):
    """All monomials x^nu with |nu| <= max_degree, in (degree, lex) order."""
    out = []
    for d in range(max_degree + 1):
        stack = [(d, ())]
        shell = []

        def walk(remaining, prefix):
            if len(prefix) == n - 1:
                shell.append(prefix + (remaining,))
                return
            for v in range(remaining + 1):
                walk(remaining - v, prefix + (v,))

        walk(d, ())
        out.extend(sorted(shell))
    return out


def check_identity(identity, n, instance, lhs, rhs, inputs):
    """Compare two operators on a list of polynomials; report first defect."""
    for f in inputs:
        defect = lhs(f) - rhs(f)
        if defect:
            return OperatorReport(identity, n, instance, defect, str(f))
    return OperatorReport(identity, n, instance, MultiPoly.zero(n))


def _affine_adjacent(i, j, n):
    return (i - j) % n in (1, n - 1)


def relation_suite(n, max_degree, rng=None, extra_random=0):
    """Replay the defining relations and derived operator identities.

    Evaluates every relation on all monomials of total degree <= max_degree
    (plus optional seeded random polynomials) and reports exact defects.
    """
    span = [MultiPoly.monomial(n, m) for m in monomial_span(n, max_degree)]
    if rng is not None and extra_random:
        span = span + [random_poly(n, max_degree, rng) for _ in range(extra_random)]
    reports = []
    add = reports.append

    def chk(identity, instance, lhs, rhs):
        add(check_identity(identity, n, instance, lhs, rhs, span))

    zero_op = lambda f: MultiPoly.zero(n)

    # quadratic (T_i - t)(T_i + 1) = 0, including the affine generator
    for i in range(0, n):
        def quad(f, i=i):
            g = apply_T(f, i)
            return apply_T(g, i) - g.scale(t - 1) - f.scale(t)
        chk("tdefs.quadratic", f"i={i}", quad, zero_op)
        chk("tdefs.inverse", f"i={i}",
            lambda f, i=i: apply_T(apply_T(f, i), i, -1), lambda f: f)

    # braid and commutation on the affine circle (n=2 has neither)
    if n >= 3:
        for i in range(n):
            j = (i + 1) % n
            chk("tdefs.braid", f"i={i},j={j}",
                compose_word([T(i), T(j), T(i)]),
                compose_word([T(j), T(i), T(j)]))
    for i in range(n):
        for j in range(i + 1, n):
            if not _affine_adjacent(i, j, n):
                chk("tdefs.commute", f"i={i},j={j}",
                    compose_word([T(i), T(j)]), compose_word([T(j), T(i)]))

    # rotation omega T_i = T_{i-1} omega
    for i in range(1, n):
        chk("tdefs.rotation", f"i={i}",
            compose_word([omega(), T(i)]), compose_word([T(i - 1), omega()]))
    chk("T0.consistency", "via s_0",
        lambda f: apply_T(f, 0), apply_T0_direct)

    # (ty) relations of T_i with the commuting family
    for i in range(1, n):
        chk("ty.1", f"i={i}", compose_word([T(i), Y(i + 1)]),
            compose_word([scaled(t), Y(i), T(i, -1)]))
        chk("ty.2", f"i={i}", compose_word([T(i), Y(i)]),
            lambda f, i=i: apply_Y(apply_T(f, i), i + 1)
            + apply_Y(f, i).scale(t - 1))
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                chk("ty.commute", f"i={i},j={j}",
                    compose_word([T(i), Y(j)]), compose_word([Y(j), T(i)]))

    # (id.2) relations of T_i, omega with multiplication operators
    for i in range(1, n):
        chk("id2.a", f"i={i}", compose_word([T(i, -1), xvar(i + 1)]),
            compose_word([scaled(1 / t), xvar(i), T(i)]))
        chk("id2.b", f"i={i}", compose_word([T(i, -1), xvar(i)]),
            lambda f, i=i: MultiPoly.variable(n, i + 1) * apply_T(f, i, -1)
            + (MultiPoly.variable(n, i) * f).scale(1 / t - 1))
        chk("id2.c", f"i={i}", compose_word([T(i), xvar(i)]),
            compose_word([scaled(t), xvar(i + 1), T(i, -1)]))
        chk("id2.d", f"i={i}", compose_word([T(i), xvar(i + 1)]),
            lambda f, i=i: MultiPoly.variable(n, i) * apply_T(f, i)
            + (MultiPoly.variable(n, i + 1) * f).scale(t - 1))
    chk("id2.omega.x1", "", compose_word([omega(), xvar(1)]),
        compose_word([scaled(q), xvar(n), omega()]))
    for i in range(1, n):
        chk("id2.omega.shift", f"i={i}", compose_word([omega(), xvar(i + 1)]),
            compose_word([xvar(i), omega()]))

    # Dunkl-type relations, for both D and the script variant
    for name, op in (("D", D), ("scriptD", scriptD)):
        for i in range(1, n):
            chk(f"nd.1({name})", f"i={i}", compose_word([T(i), op(i + 1)]),
                compose_word([scaled(t), op(i), T(i, -1)]))
            chk(f"nd.2({name})", f"i={i}", compose_word([T(i), op(i)]),
                lambda f, i=i, op=op: op(i + 1)(apply_T(f, i))
                + op(i)(f).scale(t - 1))
            for j in range(1, n + 1):
                if j not in (i, i + 1):
                    chk(f"nd.commute({name})", f"i={i},j={j}",
                        compose_word([T(i), op(j)]), compose_word([op(j), T(i)]))
        chk(f"nd.omega.n({name})", "", compose_word([op(n), omega()]),
            compose_word([scaled(q), omega(), op(1)]))
        for i in range(1, n):
            chk(f"nd.omega.shift({name})", f"i={i}",
                compose_word([op(i), omega()]), compose_word([omega(), op(i + 1)]))

    # (tet) adjoint-transformed relation
    for i in range(1, n):
        chk("tet", f"i={i}", compose_word([T(i, -1), bigE(i), T(i, -1)]),
            lambda f, i=i: apply_bigE(f, i + 1).scale(1 / t))

    # hat involution on generators
    for i in range(1, n):
        chk("hattw.T", f"i={i}", hat_conj(T(i)), T(n - i, -1))
    chk("hattw.omega", "", hat_conj(omega()), omega(-1))

    # the three forms of the script Dunkl operator
    for i in range(1, n + 1):
        chk("dunknew.12", f"i={i}",
            lambda f, i=i: apply_scriptD(f, i, form=1),
            lambda f, i=i: apply_scriptD(f, i, form=2))
        chk("dunknew.23", f"i={i}",
            lambda f, i=i: apply_scriptD(f, i, form=2),
            lambda f, i=i: apply_scriptD(f, i, form=3))

    # commuting families
    families = {"Y": Y, "D": D, "scriptD": scriptD, "e": e_op, "E": bigE,
                "h": h_op}
    for name, op in families.items():
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                chk(f"commfam.{name}", f"i={i},j={j}",
                    compose_word([op(i), op(j)]), compose_word([op(j), op(i)]))

    # multiplication and script-Dunkl recovered from Phi2 / Psi1
    for i in range(1, n + 1):
        word = ([tilde_conj(T(j, -1)) for j in range(i, n)]
                + [tilde_conj(lambda g: apply_raise(g, "Phi2"))]
                + [tilde_conj(T(j)) for j in range(1, i)])
        chk("i.1a", f"i={i}", xvar(i),
            lambda f, w=word, i=i: word_apply(w, f).scale(t ** (i - n)))
        word2 = ([T(j, -1) for j in range(i - 1, 0, -1)]
                 + [lambda g: apply_lower(g, "Psi1")]
                 + [T(j) for j in range(n - 1, i - 1, -1)])
        chk("i.2a", f"i={i}", scriptD(i),
            lambda f, w=word2, i=i: word_apply(w, f).scale(t ** (i - n)))

    # symmetrizer invariances
    for i in range(1, n):
        chk("uplus.symmetric", f"i={i}",
            lambda f, i=i: apply_s(apply_uplus(f), i), apply_uplus)
        chk("uplus.left", f"i={i}",
            lambda f, i=i: apply_T(apply_uplus(f), i),
            lambda f: apply_uplus(f).scale(t))

    return reports


def random_poly(n, max_degree, rng, n_terms=4):
    """A reproducible random polynomial with small integer coefficients."""
    span = monomial_span(n, max_degree)
    terms = {}
    for _ in range(n_terms):
        exps = span[rng.randrange(len(span))]
        terms[exps] = scalar(rng.randint(-3, 3))
    return MultiPoly(n, terms)


# -- isomorphism suites ------------------------------------------------


def phi_omega_image(n):
    """phi(tilde omega^{-1}) = T_1..T_{n-1} omega T_1^{-1}..T_{n-1}^{-1}."""
    word = ([T(j) for j in range(1, n)] + [omega()]
            + [T(j, -1) for j in range(1, n)])
    return compose_word(word)


def psi_omega_image(n):
    """psi_a(tilde omega^{-1}) = T_1..T_{n-1} (Y_n + (1+a)t^{1-n} D_n
    + a t^{2-2n} D_n Y_n^{-1} D_n)."""
    def inner(f):
        out = apply_Y(f, n)
        df = apply_D(f, n)
        out = out + df.scale((1 + a) * t ** (1 - n))
        out = out + apply_D(apply_Y(df, n, -1), n).scale(a * t ** (2 - 2 * n))
        return out
    word = [T(j) for j in range(1, n)] + [inner]
    return compose_word(word)


def psi_scriptD_image(i, n):
    """psi_a(tilde scriptD_i); E_i^* = -(1/q) scriptD_i by construction."""
    word = ([T(j) for j in range(i - 1, 0, -1)] + [T(j) for j in range(1, i)]
            + [scriptD(i)]
            + [T(j, -1) for j in range(i, n)]
            + [T(j, -1) for j in range(n - 1, i - 1, -1)])
    inner = compose_word(word)
    c = (a / q) * t ** (n + 1 - 2 * i)
    return lambda f: inner(f).scale(c)


def isomorphism_suite(which, n, max_degree):
    """Verify that the image operators satisfy the tilde-transformed relations.

    which = "phi":    x_i -> e_i,  tilde T_i^{+-1} -> T_i^{-+1},
                      tilde omega^{-1} -> T_1..T_{n-1} omega T_1^{-1}..T_{n-1}^{-1};
                      the induced tilde Y_i^{-1} -> Y_i is checked as well.
    which = "psi_a":  x_i -> E_i, with the degree-preserving/lowering omega
                      image; the induced tilde Y_i^{-1} -> h_i is checked.
    """
    if which == "phi":
        x_img = e_op
        om_img = phi_omega_image(n)
        y_img = Y
        extra_d = False
    elif which == "psi_a":
        x_img = bigE
        om_img = psi_omega_image(n)
        y_img = h_op
        extra_d = True
    else:
        raise ValueError(f"unknown isomorphism {which!r}")

    span = [MultiPoly.monomial(n, m) for m in monomial_span(n, max_degree)]
    reports = []

    def chk(identity, instance, lhs, rhs):
        reports.append(check_identity(f"{which}.{identity}", n, instance,
                                      lhs, rhs, span))

    zero_op = lambda f: MultiPoly.zero(n)

    # tilde quadratic: (S - 1/t)(S + 1) = 0 for S = image of tilde T_i
    for i in range(1, n):
        def quad(f, i=i):
            g = apply_T(f, i, -1)
            return apply_T(g, i, -1) - g.scale(1 / t - 1) - f.scale(1 / t)
        chk("quadratic", f"i={i}", quad, zero_op)
    for i in range(1, n - 1):
        chk("braid", f"i={i}",
            compose_word([T(i, -1), T(i + 1, -1), T(i, -1)]),
            compose_word([T(i + 1, -1), T(i, -1), T(i + 1, -1)]))
    for i in range(1, n):
        for j in range(i + 2, n):
            chk("commute", f"i={i},j={j}",
                compose_word([T(i, -1), T(j, -1)]),
                compose_word([T(j, -1), T(i, -1)]))
    for i in range(2, n):
        chk("rotation", f"i={i}",
            lambda f, i=i: apply_T(om_img(f), i, -1),
            lambda f, i=i: om_img(apply_T(f, i - 1, -1)))

    # images of the tilde (id.2) relations
    for i in range(1, n):
        chk("x.a", f"i={i}",
            lambda f, i=i: apply_T(x_img(i + 1)(f), i),
            lambda f, i=i: x_img(i)(apply_T(f, i, -1)).scale(t))
        chk("x.b", f"i={i}",
            lambda f, i=i: apply_T(x_img(i)(f), i),
            lambda f, i=i: x_img(i + 1)(apply_T(f, i)) + x_img(i)(f).scale(t - 1))
        chk("x.c", f"i={i}",
            lambda f, i=i: apply_T(x_img(i)(f), i, -1),
            lambda f, i=i: x_img(i + 1)(apply_T(f, i)).scale(1 / t))
        chk("x.d", f"i={i}",
            lambda f, i=i: apply_T(x_img(i + 1)(f), i, -1),
            lambda f, i=i: x_img(i)(apply_T(f, i, -1))
            + x_img(i + 1)(f).scale(1 / t - 1))
    chk("x.omega.n", "",
        lambda f: om_img(x_img(n)(f)),
        lambda f: x_img(1)(om_img(f)).scale(q))
    for i in range(1, n):
        chk("x.omega.shift", f"i={i}",
            lambda f, i=i: om_img(x_img(i)(f)),
            lambda f, i=i: x_img(i + 1)(om_img(f)))

    if extra_d:
        d_img = lambda i: psi_scriptD_image(i, n)
        for i in range(1, n):
            chk("d.1", f"i={i}",
                lambda f, i=i: apply_T(d_img(i + 1)(f), i, -1),
                lambda f, i=i: d_img(i)(apply_T(f, i)).scale(1 / t))
            chk("d.2", f"i={i}",
                lambda f, i=i: apply_T(d_img(i)(f), i, -1),
                lambda f, i=i: d_img(i + 1)(apply_T(f, i, -1))
                + d_img(i)(f).scale(1 / t - 1))
            for j in range(1, n + 1):
                if j not in (i, i + 1):
                    chk("d.commute", f"i={i},j={j}",
                        lambda f, i=i, j=j: apply_T(d_img(j)(f), i, -1),
                        lambda f, i=i, j=j: d_img(j)(apply_T(f, i, -1)))
        chk("d.omega.n", "",
            lambda f: om_img(d_img(n)(f)),
            lambda f: d_img(1)(om_img(f)).scale(1 / q))
        for i in range(1, n):
            chk("d.omega.shift", f"i={i}",
                lambda f, i=i: om_img(d_img(i)(f)),
                lambda f, i=i: d_img(i + 1)(om_img(f)))

    # the induced image of tilde Y_i^{-1}
    for i in range(1, n + 1):
        word = ([T(j, -1) for j in range(i - 1, 0, -1)] + [om_img]
                + [T(j) for j in range(n - 1, i - 1, -1)])
        chk("Y.image", f"i={i}",
            lambda f, w=word, i=i: word_apply(w, f).scale(t ** (i - n)),
            y_img(i))

    return reports
