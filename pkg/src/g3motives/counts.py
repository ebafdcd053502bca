"""Brute-force censuses of curves of genus <= 3 over tiny finite fields.

Every census is a list of ZetaClass records: a Frobenius characteristic
polynomial together with the exact mass sum 1/|Aut| of the isomorphism
classes realizing it.  Masses come from orbit counting: each model form
is weighted by |K|/|G| where G is the group acting on the form space and
K the kernel of Stab_G(form) -> Aut(curve); Lang's theorem (G connected)
then makes each weighted orbit contribute exactly 1/|Aut|, twisted forms
included.  Concretely:

  genus 1   long Weierstrass models, G = (u, r, s, t) x Gm, trivial
            kernel, weight 1/(q^3(q-1))
  genus 2,3 hyperelliptic y^2 = F(x, z), F a squarefree binary form of
            degree 2g+2, G = GL_2 x Gm; (cI, -c^{g+1}) fixes the form
            but acts as the hyperelliptic involution, so K = {(cI,
            c^{g+1})} has order q-1 and the weight is 1/|GL_2(q)|;
            odd characteristic only
  genus 3   smooth plane quartics, G = GL_3 x Gm with K = Gm (scalars),
            weight 1/|GL_3(q)|

The genus-1 mass identity (total q), the genus-2 total q^3 = Tr e_c(M_2)
derived from e_c(A_2) - Sym^2 e_c(A_1), and the genus-3 trace table at
q = 3 all pin these normalizations.

Squarefree binary forms of degree d are parametrized as (monic squarefree
polynomial of degree d or d-1, leading scalar); the scalar only enters
through its quadratic character, so each monic polynomial carries two
twist classes of multiplicity (q-1)/2.
"""

import csv
import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (NonIntegral, NonIntegralReconstruction,
                     UnsupportedCharacteristic, UnsupportedPrimePower,
                     ValidationError)
from .finitefield import factor_prime_power, field
from .leray import char_eval
from .motives import _check_functional_equation, _newton_power_sum


@dataclass(frozen=True)
class ZetaClass:
    """Aggregated isomorphism classes sharing one Frobenius char poly."""

    q: int
    g: int
    frob_charpoly: tuple  # monic, degree 2g, descending powers
    weight: Fraction      # sum of 1/|Aut| over the classes

    def point_count(self, r):
        return self.q ** r + 1 - _newton_power_sum(self.frob_charpoly, r)

    def validate(self):
        poly = self.frob_charpoly
        if len(poly) - 1 != 2 * self.g or poly[0] != 1:
            raise ValidationError("bad char poly %r" % (poly,))
        if not _check_functional_equation(poly, self.q, 1):
            raise ValidationError(
                "functional equation fails for %r at q=%d" % (poly, self.q))
        for r in range(1, 2 * self.g + 1):
            if self.point_count(r) < 0:
                raise ValidationError(
                    "negative point count %r r=%d" % (poly, r))
        if self.weight <= 0:
            raise ValidationError("non-positive mass %r" % (self.weight,))
        return self


def charpoly_from_counts(counts, g, q):
    """Monic degree-2g integer char poly from #C(F_{q^r}), r = 1..g:
    Newton's identities give the first g coefficients, the functional
    equation the rest."""
    assert len(counts) == g and g <= 3
    psums = [q ** r + 1 - counts[r - 1] for r in range(1, g + 1)]
    e = [Fraction(1)]
    for r in range(1, g + 1):
        acc = Fraction(psums[r - 1])
        for i in range(1, r):
            acc -= (-1) ** (i - 1) * e[i] * psums[r - i - 1]
        e.append(acc * (-1) ** (r - 1) / r)
    a = [(-1) ** i * e[i] for i in range(g + 1)]
    full = a + [q ** (g - i) * a[i] for i in range(g - 1, -1, -1)]
    for c in full:
        if Fraction(c).denominator != 1:
            raise NonIntegralReconstruction((counts, g, q))
    return tuple(int(c) for c in full)


def _aggregate(q, g, masses):
    """{poly: mass} -> sorted, validated list of ZetaClass."""
    out = [ZetaClass(q, g, poly, Fraction(m)).validate()
           for poly, m in sorted(masses.items()) if m]
    return out


# ---------------------------------------------------------------------------
# genus 1: long Weierstrass models over any F_q, q <= 25


def _genus1_singular_mask(F, q):
    """Boolean mask over the q^5 models (a1, a3, a2, a4, a6) marking
    singular curves: a model is singular iff it has an affine F_q-rational
    point where the equation and both partials vanish (the singular point
    of a Weierstrass cubic is unique, hence rational)."""
    mask = np.zeros(q ** 5, dtype=bool)
    radix = np.array([1, q, q ** 2, q ** 3, q ** 4], dtype=np.int64)
    add = F.add
    mul = F.mul
    neg = F.neg
    ADD, MUL = F.tables()
    grid_s, grid_t = np.meshgrid(np.arange(q), np.arange(q), indexing="ij")
    grid_s = grid_s.ravel()
    grid_t = grid_t.ravel()
    two = add(1, 1)
    three = add(two, 1)
    for x in F.elements():
        x2 = mul(x, x)
        x3 = mul(x2, x)
        for y in F.elements():
            y2 = mul(y, y)
            # unknowns ordered (a1, a3, a2, a4, a6)
            rows = [
                [mul(x, y), y, neg(x2), neg(x), neg(1)],
                [x, 1, 0, 0, 0],
                [y, 0, neg(mul(two, x)), neg(1), 0],
            ]
            rhs = [add(x3, neg(y2)), neg(mul(two, y)), mul(three, x2)]
            sol = _solve_affine(F, rows, rhs)
            if sol is None:
                continue
            part, basis = sol
            assert len(basis) == 2  # rank is always 3 (see rows 2, 3, 1)
            vecs = np.empty((q * q, 5), dtype=np.int64)
            for j in range(5):
                col = ADD[part[j], MUL[grid_s, basis[0][j]]]
                vecs[:, j] = ADD[col, MUL[grid_t, basis[1][j]]]
            mask[vecs @ radix] = True
    return mask


def _solve_affine(F, rows, rhs):
    """Solve a small affine system over F; returns (particular, nullspace
    basis) or None if inconsistent."""
    m = len(rows)
    n = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    rank = 0
    for col in range(n):
        piv = None
        for r in range(rank, m):
            if aug[r][col]:
                piv = r
                break
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = F.inv(aug[rank][col])
        aug[rank] = [F.mul(inv, v) for v in aug[rank]]
        for r in range(m):
            if r != rank and aug[r][col]:
                c = aug[r][col]
                aug[r] = [F.add(v, F.neg(F.mul(c, w)))
                          for v, w in zip(aug[r], aug[rank])]
        pivots.append(col)
        rank += 1
        if rank == m:
            break
    for r in range(rank, m):
        if aug[r][n]:
            return None
    part = [0] * n
    for r, col in enumerate(pivots):
        part[col] = aug[r][n]
    basis = []
    free = [c for c in range(n) if c not in pivots]
    for fcol in free:
        vec = [0] * n
        vec[fcol] = 1
        for r, col in enumerate(pivots):
            vec[col] = F.neg(aug[r][fcol])
        basis.append(vec)
    return part, basis


def enum_genus1(q):
    """Complete weighted census of genus-1 curves (with origin) over F_q:
    all q^5 long Weierstrass models, each smooth one weighted by
    1/(q^3 (q-1))."""
    F = field(q)
    ADD, MUL = F.tables()
    # number of roots of y^2 + c y + d = 0, indexed by c * q + d
    root2 = np.zeros(q * q, dtype=np.int16)
    for c in F.elements():
        for y in F.elements():
            d = F.neg(F.add(F.mul(y, y), F.mul(c, y)))
            root2[c * q + d] += 1
    idx = np.arange(q ** 5, dtype=np.int64)
    A1 = (idx % q).astype(np.int16)
    A3 = (idx // q % q).astype(np.int16)
    A2 = (idx // q ** 2 % q).astype(np.int16)
    A4 = (idx // q ** 3 % q).astype(np.int16)
    A6 = (idx // q ** 4 % q).astype(np.int16)
    NEG = np.array([F.neg(a) for a in F.elements()], dtype=np.int16)
    N = np.ones(q ** 5, dtype=np.int16)  # the point at infinity
    for x in F.elements():
        x2 = F.mul(x, x)
        x3 = F.mul(x2, x)
        c = ADD[MUL[A1, x], A3]
        rhs = ADD[ADD[MUL[A2, x2], MUL[A4, x]], ADD[A6, x3]]
        d = NEG[rhs]
        N += root2[c.astype(np.int64) * q + d]
    smooth = ~_genus1_singular_mask(F, q)
    traces = q + 1 - N[smooth].astype(np.int64)
    unit = Fraction(1, q ** 3 * (q - 1))
    masses = {}
    vals, cnts = np.unique(traces, return_counts=True)
    for a, cnt in zip(vals.tolist(), cnts.tolist()):
        poly = (1, -a, q)
        masses[poly] = masses.get(poly, 0) + cnt * unit
    return _aggregate(q, 1, masses)


# ---------------------------------------------------------------------------
# hyperelliptic curves, odd prime q


def _digit_arrays(q, d):
    # int16 keeps the q = 17 genus-2 grid (17^6 forms) within memory;
    # every int16 intermediate below stays < 2^15
    idx = np.arange(q ** d, dtype=np.int64)
    return [(idx // q ** i % q).astype(np.int16) for i in range(d)]


def _squarefree_mask(q, d):
    """Mask over monic degree-d polynomials (coefficient digits a_0..a_{d-1})
    marking the squarefree ones; non-squarefree = g^2 * h over all monic
    g (deg >= 1), h."""
    mask = np.ones(q ** d, dtype=bool)
    radix = np.array([q ** i for i in range(d)], dtype=np.int64)
    for e in range(1, d // 2 + 1):
        hd = d - 2 * e
        hdigits = _digit_arrays(q, hd)
        for gcode in range(q ** e):
            gcoef = [gcode // q ** i % q for i in range(e)] + [1]
            g2 = [0] * (2 * e + 1)
            for i, x in enumerate(gcoef):
                for j, y in enumerate(gcoef):
                    g2[i + j] = (g2[i + j] + x * y) % q
            # product coefficients of g^2 * h (h monic of degree hd)
            prod = [np.zeros(q ** hd, dtype=np.int64) for _ in range(d)]
            for k in range(2 * e + 1):
                if not g2[k]:
                    continue
                for i in range(hd):  # h digit i
                    if k + i < d:
                        prod[k + i] += g2[k] * hdigits[i]
                if k + hd < d:      # monic top of h
                    prod[k + hd] += g2[k]
            indices = sum((p % q) * r for p, r in zip(prod, radix))
            mask[indices] = False
    return mask


def _char_sums(q, d, want3):
    """For every monic degree-d polynomial f over the prime field F_q:
    S_r = sum over x in F_{q^r} of chi_r(f(x)) for r = 1, 2 (and 3 when
    want3), plus Z = #rational roots.  chi_r is computed through norms, so
    everything stays in F_q."""
    F = field(q)
    chi = np.array(F.chi(), dtype=np.int32)
    A = _digit_arrays(q, d)
    S1 = np.zeros(q ** d, dtype=np.int32)
    Z = np.zeros(q ** d, dtype=np.int32)
    for x in range(q):
        xp = [pow(x, i, q) for i in range(d + 1)]
        v = sum(A[i] * xp[i] for i in range(d)) + xp[d]
        v %= q
        S1 += chi[v]
        Z += (v == 0)
    # degree-2 orbits: irreducible x^2 - s x + n; Norm(alpha x + beta)
    #                  = alpha^2 n + alpha beta s + beta^2
    S2p = np.zeros(q ** d, dtype=np.int32)
    nonres = {a for a in range(q) if F.chi()[a] == -1}
    for s in range(q):
        for n in range(q):
            if (s * s - 4 * n) % q not in nonres:
                continue
            c = [0, 1]
            dd = [1, 0]
            while len(c) <= d:
                ci, di = c[-1], dd[-1]
                c.append((ci * s + di) % q)
                dd.append((-ci * n) % q)
            alpha = (sum(A[i] * c[i] for i in range(d)) + c[d]) % q
            beta = (sum(A[i] * dd[i] for i in range(d)) + dd[d]) % q
            S2p += chi[(alpha * alpha * n + alpha * beta * s + beta * beta)
                       % q]
    S2 = (q - Z) + 2 * S2p
    if not want3:
        return S1, S2, None, Z
    # degree-3 orbits: irreducible monic cubics m; Norm via the
    # determinant of multiplication by f mod m on F_q[x]/(m)
    S3p = np.zeros(q ** d, dtype=np.int32)
    for m2 in range(q):
        for m1 in range(q):
            for m0 in range(q):
                if any((x ** 3 + m2 * x * x + m1 * x + m0) % q == 0
                       for x in range(q)):
                    continue
                c = [0, 0, 1]
                b = [0, 1, 0]
                e = [1, 0, 0]
                while len(c) <= d:
                    ci, bi, ei = c[-1], b[-1], e[-1]
                    c.append((bi - ci * m2) % q)
                    b.append((ei - ci * m1) % q)
                    e.append((-ci * m0) % q)
                al = (sum(A[i] * c[i] for i in range(d)) + c[d]) % q
                be = (sum(A[i] * b[i] for i in range(d)) + b[d]) % q
                ga = (sum(A[i] * e[i] for i in range(d)) + e[d]) % q
                m00, m10, m20 = ga, be, al
                m01 = (-al * m0) % q
                m11 = (ga - al * m1) % q
                m21 = (be - al * m2) % q
                m02 = (al * m2 * m0 - be * m0) % q
                m12 = (al * (m2 * m1 - m0) - be * m1) % q
                m22 = (al * (m2 * m2 - m1) - be * m2 + ga) % q
                det = (m00.astype(np.int64) * (m11 * m22 - m21 * m12)
                       - m01 * (m10.astype(np.int64) * m22 - m20 * m12)
                       + m02 * (m10.astype(np.int64) * m21 - m20 * m11))
                S3p += chi[det % q]
    S3 = S1 + 3 * S3p
    return S1, S2, S3, Z


def enum_hyperelliptic(g, q):
    """Weighted census of hyperelliptic curves of genus g in {2, 3} over
    F_q, q an odd prime: squarefree binary forms of degree 2g+2 modulo
    GL_2 x Gm, weight 2/|GL_2(q)| per form."""
    if g not in (2, 3):
        raise ValueError(g)
    if q % 2 == 0:
        raise UnsupportedCharacteristic(q)
    p, r = factor_prime_power(q)
    if r != 1:
        raise UnsupportedPrimePower(q)
    gl2 = (q * q - 1) * (q * q - q)
    # (q-1)/2 leading scalars per twist class, each form weighted 1/|GL_2|
    unit = Fraction(q - 1, 2 * gl2)
    masses = {}
    for d in (2 * g + 1, 2 * g + 2):
        sf = _squarefree_mask(q, d)
        S1, S2, S3, _Z = _char_sums(q, d, want3=(g == 3))
        S1 = S1[sf].astype(np.int64)
        S2 = S2[sf].astype(np.int64)
        if g == 3:
            S3 = S3[sf].astype(np.int64)
        even = (d == 2 * g + 2)
        for eps in (1, -1):
            N1 = q + eps * S1 + (1 + eps if even else 1)
            N2 = q * q + S2 + (2 if even else 1)
            cols = [N1, N2]
            if g == 3:
                N3 = q ** 3 + eps * S3 + (1 + eps if even else 1)
                cols.append(N3)
            key = cols[0]
            for c in cols[1:]:
                key = key * (8 * q ** 3) + c
            vals, cnts = np.unique(key, return_counts=True)
            for v, cnt in zip(vals.tolist(), cnts.tolist()):
                ns = []
                for _ in range(len(cols) - 1):
                    ns.append(v % (8 * q ** 3))
                    v //= 8 * q ** 3
                ns.append(v)
                poly = charpoly_from_counts(tuple(reversed(ns)), g, q)
                masses[poly] = masses.get(poly, 0) + cnt * unit
    return _aggregate(q, g, masses)


# ---------------------------------------------------------------------------
# smooth plane quartics, q in {2, 3}

_QMONOMIALS = tuple((ex, ey, 4 - ex - ey)
                    for ex in range(4, -1, -1)
                    for ey in range(4 - ex, -1, -1))
assert len(_QMONOMIALS) == 15


def _ext_coords(F, a):
    return F._digits(a)


def _proj_points(Fk, k, q):
    """All points of P^2(F_{q^k}) in canonical form (last nonzero = 1)."""
    for x in Fk.elements():
        for y in Fk.elements():
            yield (x, y, 1)
    for x in Fk.elements():
        yield (x, 1, 0)
    yield (1, 0, 0)


def _orbit_reps(Fk, k, q):
    """One representative per Frobenius orbit, with the orbit size
    (= degree of the closed point)."""
    frob_pow = [None] * Fk.q
    for a in Fk.elements():
        frob_pow[a] = Fk.pow(a, q)

    def frob_point(P):
        x, y, z = (frob_pow[c] for c in P)
        for last in (z, y, x):
            if last:
                inv = Fk.inv(last)
                return tuple(Fk.mul(c, inv) for c in (x, y, z))
        raise AssertionError

    for P in _proj_points(Fk, k, q):
        orbit = [P]
        Q = frob_point(P)
        while Q != P:
            orbit.append(Q)
            Q = frob_point(Q)
        if min(orbit) == P:
            yield P, len(orbit)


def _eval_rows(Fk, P, derivative=None):
    """Values at P of the 15 quartic monomials, or of their derivative in
    the given variable (0, 1, 2), as elements of Fk."""
    x, y, z = P
    pows = [[Fk.pow(v, i) for i in range(5)] for v in (x, y, z)]
    out = []
    for mono in _QMONOMIALS:
        if derivative is None:
            e = mono
            scal = 1
        else:
            e = list(mono)
            scal = e[derivative] % Fk.p
            if e[derivative] == 0 or scal == 0:
                out.append(0)
                continue
            e[derivative] -= 1
        v = Fk.mul(pows[0][e[0]], Fk.mul(pows[1][e[1]], pows[2][e[2]]))
        if scal != 1:
            sc = scal % Fk.p  # prime-subfield scalar
            acc = 0
            for _ in range(sc):
                acc = Fk.add(acc, v)
            v = acc
        out.append(v)
    return out


def _nullspace_mod_p(rows, p, n):
    """Basis of the solution space of rows . a = 0 over F_p (n unknowns)."""
    mat = [list(r) for r in rows if any(r)]
    pivots = []
    rank = 0
    for col in range(n):
        piv = None
        for r in range(rank, len(mat)):
            if mat[r][col] % p:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col], p - 2, p) if p > 2 else 1
        mat[rank] = [(v * inv) % p for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] % p:
                c = mat[r][col]
                mat[r] = [(v - c * w) % p for v, w in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
    basis = []
    for fcol in (c for c in range(n) if c not in pivots):
        vec = [0] * n
        vec[fcol] = 1
        for r, col in enumerate(pivots):
            vec[col] = (-mat[r][fcol]) % p
        basis.append(vec)
    return basis


def _quartic_singular_mask(q):
    """Mask over the q^15 quartic forms marking the singular ones: a
    common projective zero of the form and its three partials over
    F_{q^k}, k <= 4 (singular points of a quartic lie in degree <= 4)."""
    p = q
    n = 15
    mask = np.zeros(q ** n, dtype=bool)
    radix = np.array([q ** i for i in range(n)], dtype=np.int64)
    for k in range(1, 5):
        Fk = field(q ** k)
        for P, deg in _orbit_reps(Fk, k, q):
            if deg != k:
                continue  # already marked at its own level
            rows = []
            for der in (None, 0, 1, 2):
                vals = _eval_rows(Fk, P, der)
                for coord in range(k):
                    rows.append([_ext_coords(Fk, v)[coord] for v in vals])
            basis = _nullspace_mod_p(rows, p, n)
            dim = len(basis)
            B = np.array(basis, dtype=np.int64)
            combos = _digit_arrays(p, dim)
            sols = np.zeros((p ** dim, n), dtype=np.int64)
            for jdx in range(dim):
                sols += combos[jdx][:, None] * B[jdx][None, :]
            mask[(sols % p) @ radix] = True
    return mask


def _quartic_point_counts(q):
    """(N1, N2, N3) arrays over all q^15 quartic forms."""
    n = 15
    lo_n = 8
    hi_n = n - lo_n
    idx = np.arange(q ** n, dtype=np.int64)
    lo = (idx % q ** lo_n).astype(np.int32)
    hi = (idx // q ** lo_n).astype(np.int32)
    del idx
    N = [np.zeros(q ** n, dtype=np.int16) for _ in range(3)]
    for k in range(1, 4):
        Fk = field(q ** k)
        neg_code = np.array([Fk.neg(a) for a in Fk.elements()], dtype=np.int32)
        pow_p = np.array([q ** j for j in range(k)], dtype=np.int64)
        lo_combos = np.stack(_digit_arrays(q, lo_n), axis=1)   # (q^8, 8)
        hi_combos = np.stack(_digit_arrays(q, hi_n), axis=1)
        for P, deg in _orbit_reps(Fk, k, q):
            if deg != k:
                continue  # counted at its own level
            vals = _eval_rows(Fk, P)
            coords = np.array([_ext_coords(Fk, v) for v in vals],
                              dtype=np.int64)  # (15, k)
            lo_codes = ((lo_combos @ coords[:lo_n]) % q) @ pow_p
            hi_codes = ((hi_combos @ coords[lo_n:]) % q) @ pow_p
            target = neg_code[hi_codes.astype(np.int32)]
            zero = target[hi] == lo_codes.astype(np.int32)[lo]
            for r in range(k, 4):
                if r % k == 0:
                    N[r - 1] += np.int16(k) * zero
    return N


def enum_quartics(q):
    """Weighted census of smooth plane quartics (= non-hyperelliptic
    genus-3 curves) over F_q, q in {2, 3}: all q^15 ternary quartic forms,
    each smooth one weighted by 1/|GL_3(q)|."""
    if q not in (2, 3):
        raise ValueError(q)
    smooth = ~_quartic_singular_mask(q)
    N1, N2, N3 = _quartic_point_counts(q)
    gl3 = (q ** 3 - 1) * (q ** 3 - q) * (q ** 3 - q * q)
    unit = Fraction(1, gl3)
    key = (N1[smooth].astype(np.int64) * 4096 + N2[smooth]) * 4096 \
        + N3[smooth]
    masses = {}
    vals, cnts = np.unique(key, return_counts=True)
    for v, cnt in zip(vals.tolist(), cnts.tolist()):
        n3 = v % 4096
        n2 = v // 4096 % 4096
        n1 = v // 4096 // 4096
        poly = charpoly_from_counts((n1, n2, n3), 3, q)
        masses[poly] = masses.get(poly, 0) + cnt * unit
    return _aggregate(q, 3, masses)


def census_genus3(q):
    """Full genus-3 census: quartics plus (odd q) hyperelliptic curves."""
    classes = {}
    parts = [enum_quartics(q)]
    if q % 2:
        parts.append(enum_hyperelliptic(3, q))
    for part in parts:
        for z in part:
            key = z.frob_charpoly
            classes[key] = classes.get(key, 0) + z.weight
    return _aggregate(q, 3, classes)


# ---------------------------------------------------------------------------
# weighted character sums and persistence


def mass_trace(lam, q, census):
    """Sum over the census of weight * chi_lam(Frobenius); exact integer
    (the Lefschetz side of Tr(F_q, e_c(M_g, t*V_lam)))."""
    total = Fraction(0)
    for z in census:
        total += z.weight * char_eval(tuple(lam), z.frob_charpoly, q)
    if total.denominator != 1:
        raise NonIntegral((tuple(lam), q, total))
    return int(total)


def census_filename(g, q):
    return "census_%d_%d.csv" % (g, q)


def write_census(census, path):
    tmp = path + ".tmp"
    with open(tmp, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["q", "g", "charpoly", "mass_num", "mass_den"])
        for z in census:
            w.writerow([z.q, z.g, " ".join(str(c) for c in z.frob_charpoly),
                        z.weight.numerator, z.weight.denominator])
    os.replace(tmp, path)


def read_census(path):
    out = []
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            poly = tuple(int(c) for c in row["charpoly"].split())
            out.append(ZetaClass(int(row["q"]), int(row["g"]), poly,
                                 Fraction(int(row["mass_num"]),
                                          int(row["mass_den"]))).validate())
    return out
