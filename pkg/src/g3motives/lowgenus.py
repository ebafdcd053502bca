"""Euler characteristics in genus <= 2 and for symmetric powers of A_1.

Closed forms: e_c(A_1, V_a) = -1 - S[a+2] (with the convention
S[2] := -L - 1 so that e_c(A_1) = L, applied here and nowhere else).
The symmetric quotients A_1^m/S_m are assembled by averaging over the
symmetric group: the identity sector is a Kunneth product over the
symplectic branching of V_lam, and each twisted sector evaluates the
homogenized character at a block-permutation element, which lands in
Adams operations psi^2/psi^3 of genus-1 classes.

A_2 values are ingested from data/a2_ec.csv and validated (weight-monoid
containment, odd-weight vanishing); genus-2 curve classes follow from
the stratification A_2 = t_2(M_2) u (A_1^2/S_2).
"""

import csv
import os
from fractions import Fraction
from functools import lru_cache

from .errors import (MissingData, MonoidViolation, NonTriangular, OutOfModel,
                     ValidationError)
from .motives import (MotiveExpr, adams, expr_from_str, expr_to_str,
                      gens_psi_lambda)
from .partitions import partitions
from . import leray
from .leray import (_ladd, _lmul, a_coeffs, branch_g2_to_11, branch_111,
                    symp_schur, symp_char_elementary)

_ZERO_WEIGHTS = frozenset({4, 6, 8, 10, 14})


def ec_a1(a):
    """e_c(A_1, V_a) = -1 - S[a+2] for even a (0 for odd a)."""
    if a < 0:
        raise ValueError(a)
    if a + 1 > 22:
        raise OutOfModel(("A1", a))
    if a % 2:
        return MotiveExpr.zero()
    k = a + 2
    if k == 2:  # S[2] := -L - 1
        return MotiveExpr.L()
    minus_one = MotiveExpr.one().scale(-1)
    if k in _ZERO_WEIGHTS:
        return minus_one
    return minus_one - MotiveExpr.gen("S[%d]" % k)


def _psi2_a1(a):
    return adams(ec_a1(a), 2)


def _psi3_a1(a):
    return adams(ec_a1(a), 3)


def _pad(lam, g):
    lam = tuple(lam)
    assert len(lam) <= g
    assert all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))
    return lam + (0,) * (g - len(lam))


def _sym2_twisted(lam):
    """Sector of the factor swap on A_1^2: the character at the
    block-permutation element is chi_lam(x, -x, q); expanded in
    chi_<c>(x^2; q^2) each term contributes L^f * psi^2(e_c(A_1, V_c))."""
    f = {}
    for (a, b, qe), c in symp_schur(tuple(lam), 2).items():
        key = (a + b, qe)
        v = f.get(key, 0) + c * (-1) ** b
        if v:
            f[key] = v
        elif key in f:
            del f[key]
    out = MotiveExpr.zero()
    while f:
        lead = max(f)
        big, qe = lead
        if big < 0 or big % 2 or qe < 0:
            raise NonTriangular(("sym2 sector", lam, lead))
        c0 = f[lead]
        cpart = big // 2
        sub = {(2 * y, 2 * qq + qe): v
               for (y, qq), v in symp_schur((cpart,) if cpart else (), 1).items()}
        f = _ladd(f, {k: v * c0 for k, v in sub.items()}, sign=-1)
        out = out + MotiveExpr.L(qe).scale(c0) * _psi2_a1(cpart)
    return out


@lru_cache(maxsize=None)
def ec_a1_sym2(lam):
    """e_c((A_1^2/S_2), V_lam) for lam of length <= 2."""
    lam = _pad(lam, 2)
    if sum(lam) % 2:
        return MotiveExpr.zero()
    ident = MotiveExpr.zero()
    for mu, nu, fq, m in branch_g2_to_11(lam):
        c = mu[0] if mu else 0
        d = nu[0] if nu else 0
        ident = ident + (MotiveExpr.L(fq).scale(m) * ec_a1(c)) * ec_a1(d)
    total = ident + _sym2_twisted(lam)
    return total.scale(Fraction(1, 2)).assert_integral()


def _sym3_sector_12(lam):
    """Sector of a transposition in S_3 acting on A_1^3: character at
    (swap of factors 1,2) x identity, expanded in
    chi_<c>(x^2;q^2) * chi_<d>(y;q) products."""
    f = {}
    for (a, b, c3, qe), c in symp_schur(tuple(lam), 3).items():
        key = (a + b, c3, qe)
        v = f.get(key, 0) + c * (-1) ** b
        if v:
            f[key] = v
        elif key in f:
            del f[key]
    out = MotiveExpr.zero()
    while f:
        lead = max(f)
        big, d, qe = lead
        if big < 0 or big % 2 or d < 0 or qe < 0:
            raise NonTriangular(("sym3 12-sector", lam, lead))
        c0 = f[lead]
        cpart = big // 2
        part1 = {(2 * y, 2 * qq): v
                 for (y, qq), v in symp_schur((cpart,) if cpart else (), 1).items()}
        part2 = symp_schur((d,) if d else (), 1)
        sub = {}
        for (xa, q1), v1 in part1.items():
            for (xb, q2), v2 in part2.items():
                k = (xa, xb, q1 + q2 + qe)
                sub[k] = sub.get(k, 0) + v1 * v2
        f = _ladd(f, {k: v * c0 for k, v in sub.items()}, sign=-1)
        out = out + (MotiveExpr.L(qe).scale(c0) * _psi2_a1(cpart)) * ec_a1(d)
    return out


def _sym3_sector_123(lam):
    """Sector of a 3-cycle: the composite element has e_1 = e_2 = 0 and
    e_3 = p_3(single curve), so only the e_3^m q^j part of the character
    survives; powers of e_3 = chi_<1>(x;q^3) expand back into
    chi_<c>(x;q^3), i.e. psi^3 of genus-1 classes twisted by L^{3i}."""
    collected = {}  # (m, j) -> coeff
    for (evec, qe), c in symp_char_elementary(tuple(lam), 3).items():
        if evec[0] or evec[1]:
            continue
        key = (evec[2], qe)
        collected[key] = collected.get(key, 0) + c
    # expand powers of P = chi_<1> in the 1-variable ring (x, Q), Q = q^3
    out_poly = {}  # (c, total q-exponent) -> coeff
    pcache = {0: {(0, 0): 1}}

    def ppow(m):
        if m not in pcache:
            pcache[m] = _lmul(ppow(m - 1), {(1, 0): 1, (-1, 1): 1})
        return pcache[m]

    for (m, j), c in collected.items():
        for lam1, poly in leray.expand_in_symp(ppow(m), 1).items():
            cpart = lam1[0] if lam1 else 0
            for i, n in poly.items():
                key = (cpart, j + 3 * i)
                v = out_poly.get(key, 0) + c * n
                if v:
                    out_poly[key] = v
                elif key in out_poly:
                    del out_poly[key]
    out = MotiveExpr.zero()
    for (cpart, j), c in out_poly.items():
        if j < 0:
            raise NonTriangular(("sym3 123-sector", lam, cpart, j))
        out = out + MotiveExpr.L(j).scale(c) * _psi3_a1(cpart)
    return out


@lru_cache(maxsize=None)
def ec_a1_sym3(lam):
    """e_c((A_1^3/S_3), V_lam) for lam of length <= 3."""
    lam = _pad(lam, 3)
    if sum(lam) % 2:
        return MotiveExpr.zero()
    ident = MotiveExpr.zero()
    for c1, c2, c3, fq, m in branch_111(lam):
        term = MotiveExpr.L(fq).scale(m)
        for part in (c1, c2, c3):
            term = term * ec_a1(part[0] if part else 0)
        ident = ident + term
    total = ident + _sym3_sector_12(lam).scale(3) + _sym3_sector_123(lam).scale(2)
    return total.scale(Fraction(1, 6)).assert_integral()


# ---------------------------------------------------------------------------
# ingested A_2 table


def _data_path(name):
    return os.path.join(os.path.dirname(__file__), "data", name)


@lru_cache(maxsize=None)
def a2_table(path=None):
    """{(a, b): MotiveExpr} from a2_ec.csv; validated on load."""
    path = path or _data_path("a2_ec.csv")
    if not os.path.exists(path):
        raise MissingData(("a2_ec.csv", path))
    out = {}
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            lam = tuple(int(x) for x in row["lambda"].split(","))
            expr = expr_from_str(row["expr"])
            _validate_a2_entry(lam, expr)
            out[lam] = expr
    return out


def _validate_a2_entry(lam, expr):
    a, b = lam
    if a < b or b < 0:
        raise ValidationError("bad weight %r in a2_ec.csv" % (lam,))
    if (a + b) % 2 and expr:
        raise ValidationError("odd |lambda| entry %r must vanish" % (lam,))
    allowed = set(gens_psi_lambda(lam, g=2))
    for key in expr.terms:
        if key not in allowed:
            raise MonoidViolation((lam, key, expr_to_str(expr)))


def ec_a2(lam):
    """Ingested e_c(A_2, V_lam); MissingData if the table lacks lam."""
    lam = _pad(lam, 2)
    if sum(lam) % 2:
        return MotiveExpr.zero()
    if sum(lam) > 19:
        raise OutOfModel(("A2", lam))
    table = a2_table()
    if lam not in table:
        raise MissingData(("a2_ec", lam))
    return table[lam]


def ec_m2_local(lam):
    """e_c(M_2, t*V_lam) from the stratification A_2 = t(M_2) u Sym^2 A_1;
    vanishes for odd |lam| (every genus-2 curve is hyperelliptic)."""
    lam = _pad(lam, 2)
    if sum(lam) % 2:
        return MotiveExpr.zero()
    return ec_a2(lam) - ec_a1_sym2(lam)


# ---------------------------------------------------------------------------
# pointed moduli in genus <= 2


@lru_cache(maxsize=None)
def ec_m0n(n):
    """S_n-equivariant e_c(M_{0,n}), n >= 3: the configuration space of n
    points on P^1 is a PGL_2-torsor over M_{0,n}, so each isotypic class
    is the exact quotient by e_c(PGL_2) = L^3 - L."""
    if n < 3:
        raise ValueError("M_{0,n} requires n >= 3")
    out = {}
    for mu in partitions(n):
        poly = a_coeffs(0, mu).get((), {})
        # divide the polynomial in q by q^3 - q
        out[mu] = _divide_q_poly(poly, {3: 1, 1: -1})
    return out


def _divide_q_poly(num, den):
    num = dict(num)
    quot = {}
    dl = max(den) if den else None
    while num:
        lead = max(num)
        if lead < dl:
            raise NonTriangular("inexact q-polynomial division")
        c = Fraction(num[lead], den[dl])
        quot[lead - dl] = quot.get(lead - dl, 0) + c
        for e, v in den.items():
            k = lead - dl + e
            r = num.get(k, 0) - c * v
            if r:
                num[k] = r
            elif k in num:
                del num[k]
    out = MotiveExpr.zero()
    for e, c in quot.items():
        out = out + MotiveExpr.L(e).scale(c)
    return out.assert_integral()


@lru_cache(maxsize=None)
def ec_m1n(n):
    """S_n-equivariant e_c(M_{1,n}), n >= 1: configurations on the
    universal elliptic curve modulo translation (the curve acts freely),
    assembled over M_{1,1} with e_c(A_1, V_a) locals."""
    if n < 1:
        raise ValueError("M_{1,n} requires n >= 1")
    out = {}
    for mu in partitions(n):
        char = leray.config_schur_char(1, n, mu)
        quot = leray._ldivide_exact(char, leray.curve_char(1))
        quot = {k: int(c) for k, c in quot.items() if c}
        tot = MotiveExpr.zero()
        for lam, poly in leray.expand_in_symp(quot, 1).items():
            loc = ec_a1(lam[0] if lam else 0)
            if loc:
                tot = tot + leray._qpoly_to_motive(poly) * loc
        out[mu] = tot
    return out


@lru_cache(maxsize=None)
def ec_m2n(n):
    """S_n-equivariant e_c(M_{2,n}) via the pointed translation."""
    if n < 0:
        raise ValueError(n)
    return leray.pointed_from_local(2, n, lambda lam: ec_m2_local(lam))
