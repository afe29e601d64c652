"""Compositions, their partial order, spectral vectors and node statistics.

A composition eta = (eta_1, ..., eta_n) of non-negative integers indexes
every polynomial family in this package.  This module holds the purely
combinatorial layer: the partial order used for triangular expansions,
the spectral vector of joint eigenvalues, generalized arm/leg statistics
of the diagram nodes, the closed-form constants d, d', e they generate,
and the index maps Phi, Psi, s_i.

Node statistics for s = (i, j), 1 <= j <= eta_i:

    a(s)  = eta_i - j
    l(s)  = #{k>i : j <= eta_k <= eta_i} + #{k<i : j <= eta_k + 1 <= eta_i}
    a'(s) = j - 1
    l'(s) = #{k>i : eta_k > eta_i}      + #{k<i : eta_k >= eta_i}

Spectral vector entry i is q^{eta_i} * t^{-c_i} with
c_i = #{k<i : eta_k >= eta_i} + #{k>i : eta_k > eta_i}; the zero
composition gives (1, t^-1, ..., t^{1-n}).
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .scalars import ONE, Scalar, q, t


def as_parts(eta):
    """Validate and freeze a composition given as any iterable of ints."""
    parts = tuple(int(p) for p in eta)
    if any(p < 0 for p in parts):
        raise ValueError(f"composition parts must be non-negative: {parts}")
    return parts


def weight(eta):
    return sum(eta)


def partition_of(eta):
    """eta+ : the decreasing rearrangement."""
    return tuple(sorted(eta, reverse=True))


def conjugate(lam):
    """Conjugate partition of a partition."""
    lam = tuple(lam)
    if not lam or lam[0] == 0:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def b_stat(lam):
    """b(lambda) = sum_i (i-1) lambda_i."""
    return sum(i * p for i, p in enumerate(lam))


def dominance_lt(mu, lam):
    """Strict dominance mu < lam on partitions of equal weight."""
    if sum(mu) != sum(lam):
        raise ValueError("dominance compares equal weights only")
    if tuple(mu) == tuple(lam):
        return False
    s_mu = s_lam = 0
    n = max(len(mu), len(lam))
    for i in range(n):
        s_mu += mu[i] if i < len(mu) else 0
        s_lam += lam[i] if i < len(lam) else 0
        if s_mu > s_lam:
            return False
    return True


def comp_less(nu, eta):
    """The partial order on compositions of the same weight.

    nu < eta iff nu+ < eta+ in dominance, or nu+ = eta+, nu != eta and
    every prefix sum of eta - nu is non-negative.
    """
    nu, eta = as_parts(nu), as_parts(eta)
    if len(nu) != len(eta) or weight(nu) != weight(eta):
        raise ValueError("comp_less compares equal length and weight only")
    nup, etap = partition_of(nu), partition_of(eta)
    if nup != etap:
        return dominance_lt(nup, etap)
    if nu == eta:
        return False
    run = 0
    for en, nn in zip(eta, nu):
        run += en - nn
        if run < 0:
            return False
    return True


def spectral_vector(eta):
    """Joint eigenvalue tuple (q^{eta_i} t^{-c_i})_i of the Cherednik operators."""
    eta = as_parts(eta)
    out = []
    for i, ei in enumerate(eta):
        c = sum(1 for k in range(i) if eta[k] >= ei)
        c += sum(1 for k in range(i + 1, len(eta)) if eta[k] > ei)
        out.append(q ** ei / t ** c)
    return tuple(out)


def node_stats(eta):
    """Yield (a, l, a', l') for every node of the composition diagram."""
    eta = as_parts(eta)
    n = len(eta)
    for i in range(n):
        ei = eta[i]
        lp = (sum(1 for k in range(i + 1, n) if eta[k] > ei)
              + sum(1 for k in range(i) if eta[k] >= ei))
        for j in range(1, ei + 1):
            arm = ei - j
            leg = (sum(1 for k in range(i + 1, n) if j <= eta[k] <= ei)
                   + sum(1 for k in range(i) if j <= eta[k] + 1 <= ei))
            yield arm, leg, j - 1, lp


@dataclass(frozen=True)
class CompositionConstants:
    d: Scalar
    d_prime: Scalar
    e: Scalar
    a_stat: int
    l_stat: int
    l_prime_stat: int
    b_plus: int
    b_conj: int


@lru_cache(maxsize=None)
def _constants_cached(eta):
    n = len(eta)
    d = dp = e = ONE
    a_stat = l_stat = lp_stat = 0
    for arm, leg, coarm, coleg in node_stats(eta):
        d = d * (ONE - q ** (arm + 1) * t ** (leg + 1))
        dp = dp * (ONE - q ** (arm + 1) * t ** leg)
        e = e * (ONE - q ** (coarm + 1) * t ** (n - coleg))
        a_stat += arm
        l_stat += leg
        lp_stat += coleg
    lam = partition_of(eta)
    return CompositionConstants(d, dp, e, a_stat, l_stat, lp_stat,
                                b_stat(lam), b_stat(conjugate(lam)))


def composition_constants(eta):
    """d, d', e and the summed statistics a(eta), l(eta), l'(eta)."""
    return _constants_cached(as_parts(eta))


def min_perm_length(eta):
    """Inversions of the minimal (stable-sorting) permutation w with w(eta) = eta+."""
    eta = as_parts(eta)
    order = sorted(range(len(eta)), key=lambda i: (-eta[i], i))
    return sum(1 for x, y in combinations(order, 2) if x > y)


def alpha_coefficient(eta):
    """alpha_eta = q^{sum C(eta_i,2)} t^{sum (n-i) eta+_i - len(w_eta)}.

    The equivalent form q^{a(eta)} t^{(n-1)|eta| - l(eta)} is computed as
    well; a disagreement would be an internal error, so it is asserted.
    """
    eta = as_parts(eta)
    n = len(eta)
    fexp = sum(comb(p, 2) for p in eta)
    gexp = sum((n - i - 1) * p for i, p in enumerate(partition_of(eta)))
    first = q ** fexp * t ** (gexp - min_perm_length(eta))
    c = composition_constants(eta)
    second = q ** c.a_stat * t ** ((n - 1) * weight(eta) - c.l_stat)
    if first != second:
        raise AssertionError(f"alpha_eta forms disagree for eta={eta}")
    return first


def phi_map(eta):
    """Phi eta = (eta_2, ..., eta_n, eta_1 + 1)."""
    eta = as_parts(eta)
    return eta[1:] + (eta[0] + 1,)


def psi_map(eta):
    """Psi eta = (eta_n - 1, eta_1, ..., eta_{n-1}); requires eta_n >= 1."""
    eta = as_parts(eta)
    if eta[-1] < 1:
        raise ValueError(f"Psi undefined: last part of {eta} is zero")
    return (eta[-1] - 1,) + eta[:-1]


def swap_map(eta, i):
    """s_i eta: exchange parts i and i+1 (1-indexed i)."""
    eta = as_parts(eta)
    if not 1 <= i <= len(eta) - 1:
        raise ValueError(f"swap index {i} out of range for n={len(eta)}")
    j = i - 1
    out = list(eta)
    out[j], out[j + 1] = out[j + 1], out[j]
    return tuple(out)


def comp_maps(eta, which):
    """Dispatch for the index maps: "Phi", "Psi" or ("swap", i)."""
    if which == "Phi":
        return phi_map(eta)
    if which == "Psi":
        return psi_map(eta)
    if isinstance(which, tuple) and which[0] == "swap":
        return swap_map(eta, which[1])
    raise ValueError(f"unknown composition map {which!r}")


def compositions_of(d, n):
    """All compositions of d into n non-negative parts, lexicographically."""
    if n == 0:
        return [()] if d == 0 else []
    if n == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in compositions_of(d - first, n - 1):
            out.append((first,) + rest)
    return sorted(out)


def partitions_of(d, n):
    """All partitions of d with at most n parts, padded to length n."""
    return sorted({partition_of(c) for c in compositions_of(d, n)})
