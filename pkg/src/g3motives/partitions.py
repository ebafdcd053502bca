"""Partitions and symmetric-group characters.

Partitions are plain tuples of weakly decreasing positive integers; the
empty partition is ().  Characters chi^mu(rho) are computed by
Murnaghan-Nakayama border-strip recursion, in the skew form chi^{mu/nu}
needed by the stratum engine.
"""

from fractions import Fraction
from functools import lru_cache


def is_partition(mu):
    return all(a >= 1 for a in mu) and all(
        mu[i] >= mu[i + 1] for i in range(len(mu) - 1))


def check_partition(mu):
    mu = tuple(int(a) for a in mu)
    if not is_partition(mu):
        raise ValueError("not a partition: %r" % (mu,))
    return mu


@lru_cache(maxsize=None)
def partitions(n, max_part=None):
    """All partitions of n with parts <= max_part, in reverse-lex order."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    if max_part is None or max_part > n:
        max_part = n
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_upto(n, max_part=None):
    for m in range(n + 1):
        yield from partitions(m, max_part)


def zee(mu):
    """Order of the S_n-centralizer of a permutation of cycle type mu."""
    z = 1
    mult = {}
    for a in mu:
        mult[a] = mult.get(a, 0) + 1
    for a, m in mult.items():
        z *= a ** m
        for i in range(1, m + 1):
            z *= i
    return z


def contains(mu, nu):
    """Containment of Young diagrams: nu subseteq mu."""
    if len(nu) > len(mu):
        return False
    return all(nu[i] <= mu[i] for i in range(len(nu)))


def _strip_removals(mu, r):
    """Yield (nu, height) for each border strip of size r removable from mu.

    A strip spanning rows i..j leaves nu_k = mu_{k+1} - 1 for i <= k < j
    and nu_j = mu_i - r + (j - i); height is j - i.
    """
    ell = len(mu)
    for i in range(ell):
        for j in range(i, ell):
            nu = list(mu)
            for k in range(i, j):
                nu[k] = mu[k + 1] - 1
            nu[j] = mu[i] - r + (j - i)
            if nu[j] < 0 or nu[j] > mu[j] - 1:
                continue
            if j + 1 < ell and nu[j] < mu[j + 1]:
                continue
            if i > 0 and nu[i] > mu[i - 1]:
                continue
            ok = True
            for k in range(i, j + 1):
                if k + 1 <= j and nu[k] < nu[k + 1]:
                    ok = False
                    break
            if not ok:
                continue
            while nu and nu[-1] == 0:
                nu.pop()
            yield tuple(nu), j - i


@lru_cache(maxsize=None)
def skew_character(mu, nu, rho):
    """chi^{mu/nu}(rho) by Murnaghan-Nakayama over the skew shape."""
    if not contains(mu, nu):
        return 0
    if sum(mu) - sum(nu) != sum(rho):
        return 0
    if not rho:
        return 1 if sum(mu) == sum(nu) else 0
    # peel the largest part first; fewer surviving branches
    rho_sorted = tuple(sorted(rho, reverse=True))
    r, rest = rho_sorted[0], rho_sorted[1:]
    total = 0
    for smaller, height in _strip_removals(mu, r):
        if contains(smaller, nu):
            total += (-1) ** height * skew_character(smaller, nu, rest)
    return total


def character(mu, rho):
    """Irreducible S_n character chi^mu at cycle type rho."""
    return skew_character(tuple(mu), (), tuple(rho))


def schur_to_powersum_dict(mu):
    """s_mu = sum_rho chi^mu(rho)/z_rho * p_rho, as {rho: Fraction}."""
    mu = tuple(mu)
    n = sum(mu)
    out = {}
    for rho in partitions(n):
        c = character(mu, rho)
        if c:
            out[rho] = Fraction(c, zee(rho))
    return out


def cycle_type(perm, domain=None):
    """Cycle type of a permutation given as a dict or list mapping i -> perm(i)."""
    if domain is None:
        domain = range(len(perm))
    seen = set()
    parts = []
    for start in domain:
        if start in seen:
            continue
        length = 0
        x = start
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        parts.append(length)
    return tuple(sorted(parts, reverse=True))
