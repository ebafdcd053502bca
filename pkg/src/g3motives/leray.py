"""Symplectic characters and the pointed <-> local-system translation.

Characters of GSp_2g live in a Laurent ring Z[x_1^+-, ..., x_g^+-, q]:
the 2g "eigenvalues" are x_i and q/x_i, homogenized so that deg x_i = 1,
deg q = 2 makes the character of V_lam homogeneous of degree |lam|.

The pointed translation realizes the Leray spectral sequence of
M_{g,n} -> M_g concretely: the S_n-equivariant class of the configuration
space of n points on a curve C is  Exp(e_C * Log(1 + p_1))  with
e_C = 1 + q - sum(x_i + q/x_i) evaluated in this alphabet; expanding its
Schur coefficients in symplectic Schur characters yields the a_{mu,lam}(q)
matrix, and q -> L turns characters into Tate twists.
"""

import itertools
from fractions import Fraction
from functools import lru_cache

from .errors import (MissingData, NegativeMultiplicity, NonIntegral,
                     NonTriangular)
from .motives import MotiveExpr
from .partitions import character, partitions, partitions_upto, zee
from .symfunc import moebius

# ---------------------------------------------------------------------------
# sparse Laurent polynomials; exponent tuples (x_1, ..., x_g, q), q last


def _lmul(a, b):
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            c = out.get(k, 0) + ca * cb
            if c:
                out[k] = c
            elif k in out:
                del out[k]
    return out


def _ladd(a, b, sign=1):
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) + sign * c
        if v:
            out[k] = v
        elif k in out:
            del out[k]
    return out


def _lscale(a, c):
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def _lsub_power(a, n):
    """Substitution x -> x^n for every variable (Adams on characters)."""
    if n == 1:
        return a
    return {tuple(e * n for e in k): c for k, c in a.items()}


def _lone(nv):
    return {(0,) * nv: 1}


def _leval(a, vals):
    tot = Fraction(0)
    for k, c in a.items():
        term = Fraction(c)
        for e, v in zip(k, vals):
            term *= Fraction(v) ** e
        tot += term
    return tot


def _ldivide_exact(num, den):
    """Exact division in the Laurent ring by lex leading-term elimination."""
    if not num:
        return {}
    den_lead = max(den)
    den_c = den[den_lead]
    quot = {}
    rem = dict(num)
    while rem:
        lead = max(rem)
        c = Fraction(rem[lead], den_c) if isinstance(rem[lead], int) \
            and isinstance(den_c, int) else Fraction(rem[lead]) / den_c
        k = tuple(a - b for a, b in zip(lead, den_lead))
        quot[k] = quot.get(k, 0) + c
        piece = _lmul({k: c}, den)
        rem = _ladd(rem, piece, sign=-1)
        if lead in rem:
            raise NonTriangular("division did not cancel the leading term")
    # normalize integer coefficients
    out = {}
    for k, c in quot.items():
        c = Fraction(c)
        out[k] = int(c) if c.denominator == 1 else c
    return out


# ---------------------------------------------------------------------------
# symplectic Schur characters (Weyl character formula, homogenized)


def _fterm(g, var, m):
    """x_var^m - q^m x_var^-m as a Laurent dict in g+1 variables."""
    nv = g + 1
    k1 = [0] * nv
    k1[var] = m
    k2 = [0] * nv
    k2[var] = -m
    k2[-1] = m
    if m == 0:
        return {}
    return {tuple(k1): 1, tuple(k2): -1}


def _weyl_det(g, mvec):
    """det_[i,j] ( x_j^{m_i} - q^{m_i} x_j^{-m_i} )."""
    nv = g + 1
    total = {}
    for perm in itertools.permutations(range(g)):
        sign = 1
        for i in range(g):
            for j in range(i + 1, g):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = _lone(nv)
        for i in range(g):
            prod = _lmul(prod, _fterm(g, perm[i], mvec[i]))
        total = _ladd(total, prod, sign)
    return total


def weyl_dim(lam, g):
    """Dimension of the irreducible Sp_2g representation V_lam."""
    lam = tuple(lam) + (0,) * (g - len(lam))
    l = [lam[i] + g - i for i in range(g)]
    num = den = 1
    for i in range(g):
        num *= l[i]
        den *= g - i
        for j in range(i + 1, g):
            num *= (l[i] - l[j]) * (l[i] + l[j])
            den *= (g - i - (g - j)) * (g - i + g - j)
    assert num % den == 0
    return num // den


@lru_cache(maxsize=None)
def symp_schur(lam, g):
    """Homogenized character of V_lam for GSp_2g, as a Laurent dict."""
    lam = tuple(lam)
    assert len(lam) <= g and all(a >= 0 for a in lam)
    lam_full = lam + (0,) * (g - len(lam))
    delta = tuple(g - i for i in range(g))
    num = _weyl_det(g, tuple(a + d for a, d in zip(lam_full, delta)))
    den = _weyl_det(g, delta)
    chi = _ldivide_exact(num, den)
    assert all(isinstance(c, int) for c in chi.values())
    assert _leval(chi, (1,) * (g + 1)) == weyl_dim(lam, g)
    return chi


def power_sum_char(r, g):
    """p_r of the eigenvalue alphabet {x_i, q/x_i}."""
    nv = g + 1
    out = {}
    for i in range(g):
        k1 = [0] * nv
        k1[i] = r
        k2 = [0] * nv
        k2[i] = -r
        k2[-1] = r
        out = _ladd(out, {tuple(k1): 1, tuple(k2): 1})
    return out


# ---------------------------------------------------------------------------
# expansion of Weyl-invariant characters in the symplectic Schur basis


def expand_in_symp(f, g):
    """Expand a Weyl-invariant Laurent polynomial as
    sum_lam (poly in q) * s_<lam>; returns {lam: {qexp: coeff}}."""
    rem = dict(f)
    out = {}
    guard = 0
    while rem:
        guard += 1
        if guard > 2_000_000:
            raise NonTriangular("expansion does not terminate")
        lead = max(rem)
        xs, fq = lead[:g], lead[-1]
        lam = tuple(a for a in xs if a != 0)
        if any(xs[i] < xs[i + 1] for i in range(g - 1)) or any(a < 0 for a in xs) \
                or lam != xs[:len(lam)]:
            raise NonTriangular("leading term %r is not dominant" % (lead,))
        c = rem[lead]
        out.setdefault(lam, {})
        out[lam][fq] = out[lam].get(fq, 0) + c
        qshift = (0,) * g + (fq,)
        rem = _ladd(rem, _lmul({qshift: c}, symp_schur(lam, g)), sign=-1)
    return {lam: {e: c for e, c in d.items() if c}
            for lam, d in out.items() if any(d.values())}


def schur_in_symp(mu, g):
    """a'_{mu,lam}: the Schur polynomial s_mu evaluated on the 2g-letter
    eigenvalue alphabet, expanded in symplectic Schur characters."""
    mu = tuple(mu)
    f = {}
    for rho in partitions(sum(mu)):
        ch = character(mu, rho)
        if not ch:
            continue
        prod = _lone(g + 1)
        for r in rho:
            prod = _lmul(prod, power_sum_char(r, g))
        f = _ladd(f, _lscale(prod, Fraction(ch, zee(rho))))
    f = {k: (int(c) if Fraction(c).denominator == 1 else c)
         for k, c in f.items() if c}
    assert all(isinstance(c, int) or c.denominator == 1 for c in f.values())
    f = {k: int(c) for k, c in f.items()}
    return expand_in_symp(f, g)


def _aprime_scalar(mu, lam, g):
    """The scalar c with a'_{mu,lam}(q) = c * q^((|mu|-|lam|)/2)
    (each entry is a single monomial by homogeneity)."""
    poly = schur_in_symp(mu, g).get(tuple(lam), {})
    if not poly:
        return 0
    e = (sum(mu) - sum(lam)) // 2
    assert set(poly) <= {e}
    return poly.get(e, 0)


def symp_in_schur(lam, g):
    """b'_{lam,mu}(q) with sum_mu b'_{lam,mu} a'_{mu,kappa} = delta:
    the canonical left inverse of schur_in_symp supported on partitions
    mu of length <= g (on that support a' is block-triangular by size
    with identity top blocks, hence uniquely invertible).

    Returns {mu: {qexp: Fraction}}."""
    lam = tuple(lam)
    n = sum(lam)
    idx = [mu for m in range(n % 2, n + 1, 2)
           for mu in partitions(m) if len(mu) <= g]
    rows = []
    rhs = []
    for kappa in idx:
        rows.append([Fraction(_aprime_scalar(mu, kappa, g)) for mu in idx])
        rhs.append(Fraction(1 if kappa == lam else 0))
    sol, ok = _dense_solve(rows, rhs, len(idx))
    if not ok:
        raise NonTriangular("schur_in_symp block not invertible at %r" % (lam,))
    out = {}
    for mu, c in zip(idx, sol):
        if c:
            out[mu] = {(n - sum(mu)) // 2: c}
    return out


# ---------------------------------------------------------------------------
# configuration-space series: a_{mu,lam}(q)


def curve_char(g):
    """e_C = 1 + q - sum_i (x_i + q/x_i), the class of a genus-g curve."""
    nv = g + 1
    qk = [0] * nv
    qk[-1] = 1
    e_c = {(0,) * nv: 1, tuple(qk): 1}
    for i in range(g):
        k1 = [0] * nv
        k1[i] = 1
        k2 = [0] * nv
        k2[i] = -1
        k2[-1] = 1
        e_c = _ladd(e_c, {tuple(k1): 1, tuple(k2): 1}, sign=-1)
    return e_c


@lru_cache(maxsize=None)
def _necklace_char(g, m):
    """M_m(e_C) = (1/m) sum_{d|m} moebius(m/d) psi^d(e_C)."""
    tot = {}
    for d in range(1, m + 1):
        if m % d:
            continue
        mk = moebius(m // d)
        if not mk:
            continue
        tot = _ladd(tot, _lscale(_lsub_power(curve_char(g), d), Fraction(mk, m)))
    return tot


@lru_cache(maxsize=None)
def _necklace_binomial(g, m, r):
    """C(M_m(e_C), r) = M(M-1)...(M-r+1)/r! in the Laurent ring."""
    nv = g + 1
    out = _lone(nv)
    M = _necklace_char(g, m)
    for i in range(r):
        out = _lmul(out, _ladd(M, {(0,) * nv: -i}))
        out = _lscale(out, Fraction(1, i + 1))
    return out


def _config_p_coeff(g, rho):
    """Coefficient of p_rho in Exp(e_C * Log(1+p_1)) = prod_m
    (1+p_m)^{M_m(e_C)}."""
    mult = {}
    for s in rho:
        mult[s] = mult.get(s, 0) + 1
    out = _lone(g + 1)
    for s, r in mult.items():
        out = _lmul(out, _necklace_binomial(g, s, r))
    return out


@lru_cache(maxsize=None)
def config_schur_char(g, n, mu):
    """Coefficient of s_mu in the S_n-equivariant class of the
    configuration space of n points on a genus-g curve: a Weyl-invariant
    Laurent character with integer coefficients."""
    assert sum(mu) == n
    out = {}
    for rho in partitions(n):
        ch = character(tuple(mu), rho)
        if ch:
            out = _ladd(out, _lscale(_config_p_coeff(g, rho), ch))
    clean = {}
    for k, c in out.items():
        c = Fraction(c)
        assert c.denominator == 1, "non-integral character coefficient"
        if c:
            clean[k] = int(c)
    return clean


@lru_cache(maxsize=None)
def a_coeffs(g, mu):
    """a_{mu,lam}(q) of the pointed translation: {lam: {qexp: int}}."""
    mu = tuple(mu)
    return expand_in_symp(config_schur_char(g, sum(mu), mu), g)


def _qpoly_to_motive(poly):
    return MotiveExpr({(e, 1): c for e, c in poly.items()})


def pointed_from_local(g, n, local):
    """e_{c,mu}(M_{g,n}) = sum_lam a_{mu,lam}(L) * e_c(M_g, t*V_lam).

    ``local`` maps LocalWeight tuples (len <= g) to MotiveExpr.
    Returns {mu of size n: MotiveExpr}."""
    out = {}
    for mu in partitions(n):
        tot = MotiveExpr.zero()
        for lam, poly in a_coeffs(g, mu).items():
            loc = local(lam)
            if loc:
                tot = tot + _qpoly_to_motive(poly) * loc
        out[mu] = tot
    return out


def local_from_pointed(lam, g, pointed):
    """Invert the pointed translation: recover e_c(M_g, t*V_lam) from
    e_{c,mu}(M_{g,m}) for all m <= |lam|.

    ``pointed`` maps partitions mu (any size <= |lam|) to MotiveExpr.
    Solves stage by stage in |lam'|; the top blocks are square after
    restriction and exactly solvable."""
    lam = tuple(lam)
    n = sum(lam)
    solved = {}
    for m in range(n + 1):
        lams_m = [l for l in partitions(m) if len(l) <= g]
        if not lams_m:
            continue
        # the configuration alphabet has 2g+2 letters, so every mu occurs
        mus = list(partitions(m))
        # rows: pointed[mu] minus known lower contributions
        rows = []
        rhs = []
        for mu in mus:
            acoef = a_coeffs(g, mu)
            r = []
            for l in lams_m:
                poly = acoef.get(l, {})
                # |l| = |mu| forces the twist to be 0
                assert set(poly) <= {0}
                r.append(Fraction(poly.get(0, 0)))
            y = pointed[mu]
            for l, val in solved.items():
                poly = acoef.get(l)
                if poly:
                    y = y - _qpoly_to_motive(poly) * val
            rows.append(r)
            rhs.append(y)
        sol = _solve_motive_system(rows, rhs, len(lams_m))
        for l, v in zip(lams_m, sol):
            solved[l] = v
    return solved[lam]


def _solve_motive_system(rows, rhs, nunk):
    """Exact solve of an (over)determined rational system with
    MotiveExpr-valued right-hand sides; asserts consistency."""
    rows = [list(r) for r in rows]
    rhs = list(rhs)
    piv = []
    used = [False] * len(rows)
    for col in range(nunk):
        sel = None
        for i, r in enumerate(rows):
            if not used[i] and r[col]:
                sel = i
                break
        if sel is None:
            raise MissingData(("pivot", col), "singular pointed system")
        used[sel] = True
        piv.append((sel, col))
        inv = Fraction(1) / rows[sel][col]
        rows[sel] = [c * inv for c in rows[sel]]
        rhs[sel] = rhs[sel].scale(inv)
        for i, r in enumerate(rows):
            if i != sel and r[col]:
                f = r[col]
                rows[i] = [a - f * b for a, b in zip(r, rows[sel])]
                rhs[i] = rhs[i] - rhs[sel].scale(f)
    # consistency of the unused rows
    for i, r in enumerate(rows):
        if not used[i]:
            if any(r) or rhs[i]:
                raise NonIntegral("inconsistent pointed system")
    sol = [MotiveExpr.zero()] * nunk
    for sel, col in piv:
        sol[col] = rhs[sel]
    return sol


# ---------------------------------------------------------------------------
# branching to product strata


def _embed(f, g_from, positions, g_to):
    """Embed a character in variables positions (list of x-indices) of a
    larger ring with g_to x-variables; q maps to q."""
    out = {}
    for k, c in f.items():
        nk = [0] * (g_to + 1)
        for i, pos in enumerate(positions):
            nk[pos] = k[i]
        nk[-1] = k[-1]
        out[tuple(nk)] = c
    return out


@lru_cache(maxsize=None)
def branch(lam, split):
    """Restriction of V_lam (genus 3) to the product of symplectic groups
    of genera split=(g1,g2); returns tuple of (lam1, lam2, twist, mult)."""
    g1, g2 = split
    assert g1 + g2 == 3
    rem = dict(symp_schur(tuple(lam), 3))
    out = []
    guard = 0
    while rem:
        guard += 1
        if guard > 1_000_000:
            raise NonTriangular("branch elimination does not terminate")
        lead = max(rem)
        first, second, fq = lead[:g1], lead[g1:3], lead[-1]
        mu = tuple(a for a in first if a)
        nu = tuple(a for a in second if a)
        if list(first) != sorted(first, reverse=True) or \
                list(second) != sorted(second, reverse=True) or \
                any(a < 0 for a in lead[:3]):
            raise NonTriangular("non-dominant leading term %r" % (lead,))
        c = rem[lead]
        if c < 0:
            raise NegativeMultiplicity((lam, split, mu, nu, fq, c))
        prod = _lmul(
            _embed(symp_schur(mu, g1), g1, list(range(g1)), 3),
            _embed(symp_schur(nu, g2), g2, list(range(g1, 3)), 3))
        qshift = (0, 0, 0, fq)
        rem = _ladd(rem, _lmul({qshift: c}, prod), sign=-1)
        out.append((mu, nu, fq, c))
    return tuple(out)


@lru_cache(maxsize=None)
def branch_g2_to_11(lam):
    """Restriction of a genus-2 V_lam to Sp_2 x Sp_2."""
    rem = dict(symp_schur(tuple(lam), 2))
    out = []
    while rem:
        lead = max(rem)
        a, b, fq = lead
        if a < 0 or b < 0:
            raise NonTriangular("non-dominant leading term %r" % (lead,))
        mu = (a,) if a else ()
        nu = (b,) if b else ()
        c = rem[lead]
        if c < 0:
            raise NegativeMultiplicity((lam, mu, nu, fq, c))
        prod = _lmul(_embed(symp_schur(mu, 1), 1, [0], 2),
                     _embed(symp_schur(nu, 1), 1, [1], 2))
        rem = _ladd(rem, _lmul({(0, 0, fq): c}, prod), sign=-1)
        out.append((mu, nu, fq, c))
    return tuple(out)


@lru_cache(maxsize=None)
def branch_111(lam):
    """Full restriction of a genus-3 V_lam to Sp_2^3:
    tuple of ((c1,), (c2,), (c3,), twist, mult)."""
    out = {}
    for mu, nu, e1, m1 in branch(tuple(lam), (2, 1)):
        for k1, k2, e2, m2 in branch_g2_to_11(mu):
            key = (k1, k2, nu, e1 + e2)
            out[key] = out.get(key, 0) + m1 * m2
    return tuple((k1, k2, nu, e, m) for (k1, k2, nu, e), m in sorted(out.items()))


# ---------------------------------------------------------------------------
# expansion in elementary symmetric functions; character evaluation


@lru_cache(maxsize=None)
def _elementary_char(g, i):
    """e_i of the 2g-letter eigenvalue alphabet {x_j, q/x_j}."""
    nv = g + 1
    letters = []
    for j in range(g):
        k1 = [0] * nv
        k1[j] = 1
        letters.append(tuple(k1))
        k2 = [0] * nv
        k2[j] = -1
        k2[-1] = 1
        letters.append(tuple(k2))
    out = {}
    for comb in itertools.combinations(letters, i):
        k = tuple(sum(e) for e in zip(*comb)) if comb else (0,) * nv
        out[k] = out.get(k, 0) + 1
    return out


@lru_cache(maxsize=None)
def _e_monomial(g, evec, fq):
    """e_1^a1 ... e_g^ag * q^fq as a Laurent character (cached chain)."""
    nv = g + 1
    for i in range(g - 1, -1, -1):
        if evec[i]:
            lower = list(evec)
            lower[i] -= 1
            prev = _e_monomial(g, tuple(lower), fq)
            return _lmul(prev, _elementary_char(g, i + 1))
    k = [0] * nv
    k[-1] = fq
    return {tuple(k): 1}


@lru_cache(maxsize=None)
def symp_char_elementary(lam, g):
    """chi_lam = sum coeff * e_1^a1 ... e_g^ag * q^f: the (unique)
    expansion of the homogenized character in elementary symmetric
    functions of the eigenvalue alphabet, by triangular elimination
    (the leading monomial of e_1^a1...e_g^ag q^f is
    x_1^{a1+..+ag} x_2^{a2+..+ag} ... q^f, all distinct and unit)."""
    lam = tuple(lam)
    rem = dict(symp_schur(lam, g))
    out = {}
    while rem:
        lead = max(rem)
        xs, fq = lead[:g], lead[-1]
        if any(xs[i] < xs[i + 1] for i in range(g - 1)) or any(a < 0 for a in xs):
            raise NonTriangular("non-dominant leading term %r" % (lead,))
        evec = tuple((xs[i] - (xs[i + 1] if i + 1 < g else 0))
                     for i in range(g))
        c = rem[lead]
        out[(evec, fq)] = out.get((evec, fq), 0) + c
        rem = _ladd(rem, _lscale(_e_monomial(g, evec, fq), c), sign=-1)
    return {k: v for k, v in out.items() if v}


def symp_char_value(lam, g, evals, qval):
    """chi_lam given the values of e_1..e_g of the alphabet and of q.
    Values may live in any commutative ring (ints, Fractions, ...)."""
    tot = 0
    for (evec, fq), c in symp_char_elementary(tuple(lam), g).items():
        term = c
        for e, v in zip(evec, evals):
            for _ in range(e):
                term = term * v
        if fq >= 0:
            term = term * qval ** fq
        else:
            term = Fraction(term) / Fraction(qval) ** (-fq)
        tot = tot + term
    return tot


def _dense_solve(rows, rhs, nunk):
    rows = [list(r) + [v] for r, v in zip(rows, rhs)]
    rank = 0
    piv_cols = []
    for col in range(nunk):
        sel = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                sel = i
                break
        if sel is None:
            return None, False
        rows[rank], rows[sel] = rows[sel], rows[rank]
        inv = Fraction(1) / rows[rank][col]
        rows[rank] = [c * inv for c in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        piv_cols.append(col)
        rank += 1
    for i in range(rank, len(rows)):
        if rows[i][nunk]:
            return None, False
    sol = [Fraction(0)] * nunk
    for r, col in enumerate(piv_cols):
        sol[col] = rows[r][nunk]
    return sol, True


def char_eval(lam, frob_poly, q):
    """chi_lam at the Frobenius eigenvalue multiset of an integer char
    poly (degree 2g, monic, descending coefficients); exact integer."""
    lam = tuple(lam)
    g = (len(frob_poly) - 1) // 2
    assert len(frob_poly) - 1 == 2 * g
    evals = [(-1) ** i * frob_poly[i] for i in range(1, g + 1)]
    tot = Fraction(symp_char_value(lam, g, evals, q))
    if tot.denominator != 1:
        raise NonIntegral((lam, frob_poly, q, tot))
    return int(tot)
