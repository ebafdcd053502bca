"""Exact q-expansions of the level-1 eigenforms of weight 12..22.

Each space S_k(SL_2(Z)) for k in {12, 16, 18, 20, 22} is 1-dimensional, so
the normalized eigenform is Delta times the appropriate Eisenstein factor:

    f_12 = Delta,  f_16 = E4*Delta,  f_18 = E6*Delta,
    f_20 = E4^2*Delta,  f_22 = E4*E6*Delta.

Hecke eigenvalues a_p are literal q-expansion coefficients (the forms are
normalized, a_1 = 1).  All arithmetic is exact integers.
"""

from functools import lru_cache

PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23)

_PREC = 30  # coefficients a_1 .. a_{PREC-1}; enough for p <= 23


def _mul(a, b, prec=_PREC):
    out = [0] * prec
    for i, ai in enumerate(a):
        if ai == 0 or i >= prec:
            continue
        for j, bj in enumerate(b):
            if i + j >= prec:
                break
            out[i + j] += ai * bj
    return out


def _sigma(k, n):
    return sum(d ** k for d in range(1, n + 1) if n % d == 0)


@lru_cache(maxsize=None)
def eisenstein(k, prec=_PREC):
    """Normalized E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, k in {4, 6}."""
    if k == 4:
        c = 240
    elif k == 6:
        c = -504
    else:
        raise ValueError(k)
    return tuple([1] + [c * _sigma(k - 1, n) for n in range(1, prec)])


@lru_cache(maxsize=None)
def delta_qexp(prec=_PREC):
    """Delta = q * prod (1-q^n)^24, exact integer coefficients."""
    prod = [0] * prec
    prod[0] = 1
    for n in range(1, prec):
        factor = [0] * prec
        factor[0] = 1
        factor[n] = -1
        for _ in range(24):
            prod = _mul(prod, factor, prec)
    return tuple([0] + list(prod[:prec - 1]))  # shift by q^1


@lru_cache(maxsize=None)
def eigenform(k, prec=_PREC):
    """q-expansion of the normalized cusp eigenform of weight k, level 1."""
    d = list(delta_qexp(prec))
    if k == 12:
        f = d
    elif k == 16:
        f = _mul(d, eisenstein(4, prec), prec)
    elif k == 18:
        f = _mul(d, eisenstein(6, prec), prec)
    elif k == 20:
        f = _mul(_mul(d, eisenstein(4, prec), prec), eisenstein(4, prec), prec)
    elif k == 22:
        f = _mul(_mul(d, eisenstein(4, prec), prec), eisenstein(6, prec), prec)
    else:
        raise ValueError("no 1-dimensional level-1 cusp space of weight %d" % k)
    assert f[1] == 1, "eigenform not normalized"
    return tuple(f)


def hecke_ap(k, p):
    """Eigenvalue a_p of the weight-k level-1 eigenform."""
    return eigenform(k)[p]


def elliptic_charpoly(k, p):
    """Frobenius char poly of S[k] at p: x^2 - a_p x + p^(k-1).

    Returned as the coefficient tuple (1, -a_p, p^(k-1)) (descending powers).
    """
    a = hecke_ap(k, p)
    return (1, -a, p ** (k - 1))


def sym2_s12_charpoly(p):
    """Char poly of Sym^2 S[12] at p, derived from S[12]'s roots a, b:
    roots a^2, ab, b^2 with e1 = t^2 - p^11, e2 = p^11 (t^2 - p^11),
    e3 = p^33, where t = tau(p)."""
    t = hecke_ap(12, p)
    p11 = p ** 11
    e1 = t * t - p11
    e2 = p11 * e1
    e3 = p11 ** 3
    return (1, -e1, e2, -e3)
