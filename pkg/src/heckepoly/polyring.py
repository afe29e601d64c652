"""Sparse polynomials in x_1..x_n over the exact scalar field.

Terms are stored as a dict mapping exponent tuples to nonzero scalars, so
equality is term-set equality of canonical coefficients.  Exponents never
go negative: operators that "divide by x_i" are implemented through
exact_divide, and a failed exact division raises loudly instead of
producing a Laurent monomial.

Besides ring arithmetic the module provides the variable manipulations
every Hecke operator is built from: permutations, per-variable scalings,
monomial maps x_i -> c * x_j, scalar substitution, the coefficient
involutions (tilde inverts q and t, hat additionally reverses variables),
and a leading-term extraction under the composition partial order.
"""

from .compositions import comp_less
from .scalars import ONE, ZERO, Scalar, scalar, tilde_scalar


class DivisibilityError(ArithmeticError):
    """Raised by exact_divide when the division leaves a remainder."""

    def __init__(self, message, remainder):
        super().__init__(message)
        self.remainder = remainder


class MultiPoly:
    """A polynomial in n variables with Scalar coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff:
                    clean[tuple(exps)] = coeff
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def constant(cls, n, value):
        value = scalar(value)
        return cls(n, {(0,) * n: value})

    @classmethod
    def monomial(cls, n, exps, coeff=ONE):
        return cls(n, {tuple(exps): scalar(coeff)})

    @classmethod
    def variable(cls, n, i):
        """x_i, 1-indexed."""
        exps = [0] * n
        exps[i - 1] = 1
        return cls(n, {tuple(exps): ONE})

    # -- ring structure ------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.n, other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            c = out.get(exps)
            c = coeff if c is None else c + coeff
            if c:
                out[exps] = c
            elif exps in out:
                del out[exps]
        res = MultiPoly.__new__(MultiPoly)
        res.n, res.terms = self.n, out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = MultiPoly.__new__(MultiPoly)
        res.n = self.n
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                c = c1 * c2
                prev = out.get(key)
                c = c if prev is None else prev + c
                if c:
                    out[key] = c
                elif key in out:
                    del out[key]
        res = MultiPoly.__new__(MultiPoly)
        res.n, res.terms = self.n, out
        return res

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, value):
        value = scalar(value)
        if not value:
            return MultiPoly.zero(self.n)
        res = MultiPoly.__new__(MultiPoly)
        res.n = self.n
        res.terms = {e: c * value for e, c in self.terms.items()}
        return res

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers not supported")
        out = MultiPoly.constant(self.n, ONE)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- inspection ----------------------------------------------------

    def coeff(self, exps):
        return self.terms.get(tuple(exps), ZERO)

    def total_degree(self):
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def homogeneous_components(self):
        """dict degree -> MultiPoly."""
        comps = {}
        for exps, coeff in self.terms.items():
            comps.setdefault(sum(exps), {})[exps] = coeff
        return {d: MultiPoly(self.n, ts) for d, ts in sorted(comps.items())}

    def truncate(self, max_degree):
        """Drop all terms of total degree above max_degree."""
        kept = {e: c for e, c in self.terms.items() if sum(e) <= max_degree}
        return MultiPoly(self.n, kept)

    def sorted_terms(self):
        """Terms sorted by total degree, then lexicographic exponent."""
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), ec[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for exps, coeff in self.sorted_terms():
            mono = "*".join(f"x{i+1}^{e}" if e > 1 else f"x{i+1}"
                            for i, e in enumerate(exps) if e)
            bits.append(f"({coeff})*{mono}" if mono else f"({coeff})")
        return " + ".join(bits)

    __repr__ = __str__

    # -- variable manipulations -----------------------------------------

    def map_coeffs(self, fn):
        return MultiPoly(self.n, {e: fn(c) for e, c in self.terms.items()})

    def monomial_map(self, images):
        """Substitute x_i -> c_i * x_{j_i}; images[i-1] = (c_i, j_i), 1-indexed j.

        The images must form a permutation of the variables for this to be
        invertible, but that is not enforced here.
        """
        out = {}
        for exps, coeff in self.terms.items():
            new = [0] * self.n
            c = coeff
            for pos, e in enumerate(exps):
                if not e:
                    continue
                factor, target = images[pos]
                new[target - 1] += e
                if factor is not ONE:
                    c = c * scalar(factor) ** e
            key = tuple(new)
            prev = out.get(key)
            c = c if prev is None else prev + c
            if c:
                out[key] = c
            elif key in out:
                del out[key]
        return MultiPoly(self.n, out)

    def substitute_scalars(self, values):
        """Substitute scalars for variables: values maps 1-indexed i to Scalar.

        Substituted variables disappear from the exponent vector (their
        entry becomes 0); the variable count n is unchanged.
        """
        out = {}
        for exps, coeff in self.terms.items():
            new = list(exps)
            c = coeff
            for i, val in values.items():
                e = exps[i - 1]
                if e:
                    c = c * scalar(val) ** e
                    new[i - 1] = 0
            if not c:
                continue
            key = tuple(new)
            prev = out.get(key)
            c = c if prev is None else prev + c
            if c:
                out[key] = c
            elif key in out:
                del out[key]
        return MultiPoly(self.n, out)

    def eval_scalars(self, point):
        """Full evaluation at a tuple of scalars; returns a Scalar."""
        total = ZERO
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(point, exps):
                if e:
                    term = term * scalar(v) ** e
            total = total + term
        return total


def permute_vars(f, sigma):
    """Relabel variables by the permutation sigma (x_i becomes x_{sigma[i-1]})."""
    if sorted(sigma) != list(range(1, f.n + 1)):
        raise ValueError(f"not a permutation of 1..{f.n}: {sigma}")
    return f.monomial_map([(ONE, sigma[i]) for i in range(f.n)])


def scale_var(f, i, factor):
    """x_i -> factor * x_i."""
    images = [(ONE, j + 1) for j in range(f.n)]
    images[i - 1] = (scalar(factor), i)
    return f.monomial_map(images)


def reversal(f):
    """x_i -> x_{n+1-i}."""
    return permute_vars(f, list(range(f.n, 0, -1)))


def tilde(f):
    """Coefficient involution q -> 1/q, t -> 1/t."""
    return f.map_coeffs(tilde_scalar)


def hat(f):
    """tilde composed with variable reversal (in either order)."""
    return reversal(tilde(f))


def _grlex_key(exps):
    return (sum(exps), exps)


def exact_divide(f, g):
    """Return h with f = g*h, or raise DivisibilityError with the remainder."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    if not f:
        return MultiPoly.zero(f.n)
    g_lead = max(g.terms, key=_grlex_key)
    g_lc = g.terms[g_lead]
    quotient = {}
    remainder = {}
    work = dict(f.terms)
    while work:
        exps = max(work, key=_grlex_key)
        coeff = work.pop(exps)
        diff = tuple(e - ge for e, ge in zip(exps, g_lead))
        if any(d < 0 for d in diff):
            remainder[exps] = coeff
            continue
        c = coeff / g_lc
        quotient[diff] = c
        for ge, gc in g.terms.items():
            if ge == g_lead:
                continue
            key = tuple(d + e for d, e in zip(diff, ge))
            prev = work.get(key)
            val = -c * gc if prev is None else prev - c * gc
            if val:
                work[key] = val
            elif key in work:
                del work[key]
    if remainder:
        rem = MultiPoly(f.n, remainder)
        raise DivisibilityError(f"non-exact division, remainder {rem}", rem)
    return MultiPoly(f.n, quotient)


def leading_term(f, less=comp_less, require_unique=True):
    """A maximal (exponent, coefficient) pair at top total degree.

    Maximality is with respect to the supplied strict partial order on the
    top-degree exponent vectors.  With require_unique, an ambiguous maximum
    (two incomparable maximal exponents) raises ValueError.
    """
    if not f.terms:
        raise ValueError("leading term of the zero polynomial")
    top = max(sum(e) for e in f.terms)
    shell = [e for e in f.terms if sum(e) == top]
    maximal = [e for e in shell
               if not any(o != e and less(e, o) for o in shell)]
    if require_unique and len(maximal) > 1:
        raise ValueError(f"ambiguous leading term among {sorted(maximal)}")
    exps = sorted(maximal)[0]
    return exps, f.terms[exps]
