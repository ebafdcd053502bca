"""Truncated symmetric-function series with motive coefficients.

A SymSeries is a finite sum  sum  c_{a,mu} * h^a * p_mu  with MotiveExpr
coefficients (exact rational scalars), truncated by a mandatory degree cap
(deg p_k = k) and genus cap (max h-exponent).  Negative h-exponents are
allowed (genus-0 slots of the Getzler-Kapranov calculus contribute h^-1).

Two optional pruning caps serve the GK pipeline: ``weight_cap`` drops
monomials with deg + 2h > weight_cap (deg + 2h never decreases under
products, plethysm or Delta, so this is a sound reachability prune for a
target extraction at (h = g-1, deg = n)), and ``floor3`` drops monomials
with deg + 3h < 0 (every product of stable slot classes satisfies
deg + 3h >= #Delta-applications >= 0).
"""

from fractions import Fraction

from .motives import MotiveExpr, adams
from .partitions import character, partitions, schur_to_powersum_dict, zee

_MOEBIUS = {1: 1, 2: -1, 3: -1, 4: 0, 5: -1, 6: 1, 7: -1, 8: 0, 9: 0,
            10: 1, 11: -1, 12: 0, 13: -1, 14: 1, 15: 1, 16: 0, 17: -1,
            18: 0, 19: -1, 20: 0, 21: 1, 22: 1, 23: -1, 24: 0, 25: 0}


def moebius(n):
    if n in _MOEBIUS:
        return _MOEBIUS[n]
    m, out = n, 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    if m > 1:
        out = -out
    return out


def _as_motive(c):
    if isinstance(c, MotiveExpr):
        return c
    return MotiveExpr.one().scale(c)


class SymSeries:
    __slots__ = ("degree_cap", "genus_cap", "weight_cap", "floor3", "coeffs")

    def __init__(self, degree_cap, genus_cap, coeffs=None, weight_cap=None,
                 floor3=False):
        self.degree_cap = degree_cap
        self.genus_cap = genus_cap
        self.weight_cap = weight_cap
        self.floor3 = floor3
        self.coeffs = {}
        if coeffs:
            for (a, mu), c in coeffs.items():
                self._add_term(a, tuple(mu), _as_motive(c))

    # -- internals --------------------------------------------------------

    def keeps(self, a, mu):
        d = sum(mu)
        if d > self.degree_cap or a > self.genus_cap:
            return False
        if self.weight_cap is not None and d + 2 * a > self.weight_cap:
            return False
        if self.floor3 and d + 3 * a < 0:
            return False
        return True

    def _add_term(self, a, mu, c):
        if not c or not self.keeps(a, mu):
            return
        key = (a, mu)
        cur = self.coeffs.get(key)
        new = c if cur is None else cur + c
        if new:
            self.coeffs[key] = new
        elif key in self.coeffs:
            del self.coeffs[key]

    def _empty(self):
        return SymSeries(self.degree_cap, self.genus_cap,
                         weight_cap=self.weight_cap, floor3=self.floor3)

    def same_caps(self, other):
        return (self.degree_cap == other.degree_cap
                and self.genus_cap == other.genus_cap
                and self.weight_cap == other.weight_cap
                and self.floor3 == other.floor3)

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, degree_cap, genus_cap, **kw):
        return cls(degree_cap, genus_cap, **kw)

    @classmethod
    def const(cls, c, degree_cap, genus_cap, **kw):
        return cls(degree_cap, genus_cap, {(0, ()): _as_motive(c)}, **kw)

    @classmethod
    def from_schur(cls, mu, coeff, h, degree_cap, genus_cap, **kw):
        """coeff * h^h * s_mu expanded in power sums."""
        out = cls(degree_cap, genus_cap, **kw)
        coeff = _as_motive(coeff)
        for rho, c in schur_to_powersum_dict(tuple(mu)).items():
            out._add_term(h, rho, coeff.scale(c))
        return out

    # -- linear structure -------------------------------------------------

    def __add__(self, other):
        assert self.same_caps(other)
        out = self._empty()
        out.coeffs = dict(self.coeffs)
        for (a, mu), c in other.coeffs.items():
            out._add_term(a, mu, c)
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        if isinstance(c, MotiveExpr):
            out = self._empty()
            for (a, mu), v in self.coeffs.items():
                out._add_term(a, mu, v * c)
            return out
        c = Fraction(c)
        if not c:
            return self._empty()
        out = self._empty()
        out.coeffs = {k: v.scale(c) for k, v in self.coeffs.items()}
        return out

    def __eq__(self, other):
        return isinstance(other, SymSeries) and self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        items = sorted(self.coeffs, key=lambda k: (k[0], sum(k[1]), k[1]))
        bits = ["h^%d p_%s: %r" % (a, list(mu), c) for (a, mu), c in
                ((k, self.coeffs[k]) for k in items)]
        return "SymSeries{%s}" % "; ".join(bits[:12]) + \
            ("..." if len(bits) > 12 else "")

    # -- products ---------------------------------------------------------

    def multiply(self, other):
        assert self.same_caps(other)
        out = self._empty()
        # bucket by (h-exponent, degree) so the cap checks run once per
        # bucket pair rather than once per term pair
        def buckets(s):
            b = {}
            for (a, mu), c in s.coeffs.items():
                b.setdefault((a, sum(mu)), []).append((mu, c))
            return b
        dcap, gcap = self.degree_cap, self.genus_cap
        wcap, f3 = self.weight_cap, self.floor3
        oc = out.coeffs
        for (a1, d1), terms1 in buckets(self).items():
            for (a2, d2), terms2 in buckets(other).items():
                a, d = a1 + a2, d1 + d2
                if d > dcap or a > gcap:
                    continue
                if wcap is not None and d + 2 * a > wcap:
                    continue
                if f3 and d + 3 * a < 0:
                    continue
                for m1, c1 in terms1:
                    for m2, c2 in terms2:
                        key = (a, tuple(sorted(m1 + m2, reverse=True)))
                        c = c1 * c2
                        cur = oc.get(key)
                        new = c if cur is None else cur + c
                        if new:
                            oc[key] = new
                        elif key in oc:
                            del oc[key]
        return out

    def power(self, n):
        out = SymSeries.const(1, self.degree_cap, self.genus_cap,
                              weight_cap=self.weight_cap, floor3=self.floor3)
        for _ in range(n):
            out = out.multiply(self)
        return out

    # -- plethysm ---------------------------------------------------------

    def adams_image(self, k):
        """p_k-plethysm applied to this series: p_j -> p_{jk},
        coefficients by psi^k, h^a -> h^{ka}."""
        if k == 1:
            return self
        out = self._empty()
        for (a, mu), c in self.coeffs.items():
            nm = tuple(j * k for j in mu)
            if out.keeps(k * a, nm):
                out._add_term(k * a, nm, adams(c, k))
        return out

    def plethysm(self, g):
        """self o g: substitute p_k -> psi_k(g) in self."""
        assert self.same_caps(g)
        images = {}

        def psi(k):
            if k not in images:
                images[k] = g.adams_image(k)
            return images[k]

        out = self._empty()
        for (a, mu), c in self.coeffs.items():
            term = SymSeries.const(c, self.degree_cap, self.genus_cap,
                                   weight_cap=self.weight_cap,
                                   floor3=self.floor3)
            # h^a of the outer series passes through unchanged
            term = term.h_shift(a)
            for k in mu:
                term = term.multiply(psi(k))
                if not term:
                    break
            out = out + term
        return out

    def h_shift(self, a):
        if a == 0:
            return self
        out = self._empty()
        for (b, mu), c in self.coeffs.items():
            out._add_term(a + b, mu, c)
        return out

    # -- Exp / Log --------------------------------------------------------

    def _psi_sum(self, transform):
        """sum_k transform(k)/k * psi_k(self), k bounded by the caps."""
        for (a, mu), _c in self.coeffs.items():
            if sum(mu) == 0 and a <= 0:
                raise ValueError(
                    "Exp/Log requires no degree-0, h<=0 terms (found h^%d)" % a)
        kmax = max(self.degree_cap, self.genus_cap, 1)
        out = self._empty()
        for k in range(1, kmax + 1):
            t = transform(k)
            if not t:
                continue
            img = self.adams_image(k)
            if img:
                out = out + img.scale(Fraction(t, k))
        return out

    def pleth_exp(self):
        """Exp(f) = exp(sum_k psi_k(f)/k); f must have no deg-0 h<=0 part."""
        F = self._psi_sum(lambda k: 1)
        out = SymSeries.const(1, self.degree_cap, self.genus_cap,
                              weight_cap=self.weight_cap, floor3=self.floor3)
        term = out
        m = 0
        while True:
            m += 1
            term = term.multiply(F).scale(Fraction(1, m))
            if not term:
                break
            out = out + term
        return out

    def pleth_log(self):
        """Log(F) for F with constant term 1."""
        one = self.coeffs.get((0, ()))
        if one is None or one != MotiveExpr.one():
            raise ValueError("Log requires constant term 1")
        R = self - SymSeries.const(1, self.degree_cap, self.genus_cap,
                                   weight_cap=self.weight_cap,
                                   floor3=self.floor3)
        logF = self._empty()
        term = SymSeries.const(1, self.degree_cap, self.genus_cap,
                               weight_cap=self.weight_cap, floor3=self.floor3)
        m = 0
        while True:
            m += 1
            term = term.multiply(R)
            if not term:
                break
            logF = logF + term.scale(Fraction((-1) ** (m + 1), m))
        return logF._psi_sum(moebius)

    # -- the GK Delta operator --------------------------------------------

    def delta(self, alpha, beta):
        """Delta f = sum_n h^n (alpha*n * d^2f/dp_n^2 + beta * df/dp_{2n}).

        One application creates one sigma-orbit of glued edges: an orbit
        of n untwisted edges joins two n-point-orbits (two p_n's) and
        raises the h-exponent by n; an orbit of n half-edge-flipped edges
        folds one 2n-point-orbit (one p_{2n}) and also raises h by n.
        Both variants preserve deg + 2h."""
        out = self._empty()
        for (a, mu), c in self.coeffs.items():
            mult = {}
            for part in mu:
                mult[part] = mult.get(part, 0) + 1
            for n, m in mult.items():
                # second derivative in p_n: h^n
                if m >= 2:
                    rest = list(mu)
                    rest.remove(n)
                    rest.remove(n)
                    out._add_term(a + n, tuple(rest),
                                  c.scale(alpha * n * m * (m - 1)))
                # first derivative in p_{2n'} for n = 2n': h^{n'}
                if n % 2 == 0:
                    rest = list(mu)
                    rest.remove(n)
                    out._add_term(a + n // 2, tuple(rest), c.scale(beta * m))
        return out

    def exp_delta(self, alpha, beta):
        """Exp(Delta) applied to self; terminates because Delta raises h."""
        out = self
        term = self
        m = 0
        while True:
            m += 1
            term = term.delta(alpha, beta).scale(Fraction(1, m))
            if not term:
                break
            out = out + term
        return out

    # -- extraction -------------------------------------------------------

    def project(self, h, degree):
        """The sub-series of h-exponent h and total degree degree."""
        out = self._empty()
        for (a, mu), c in self.coeffs.items():
            if a == h and sum(mu) == degree:
                out._add_term(a, mu, c)
        return out

    def schur_coefficients(self, h, degree):
        """{mu: MotiveExpr} of the (h, degree)-slice in the Schur basis."""
        slice_ = {mu: c for (a, mu), c in self.coeffs.items()
                  if a == h and sum(mu) == degree}
        out = {}
        for mu in partitions(degree):
            tot = MotiveExpr.zero()
            for rho, c in slice_.items():
                ch = character(mu, rho)
                if ch:
                    tot = tot + c.scale(ch)
            if tot:
                out[mu] = tot
        return out


def schur_to_p(mu, cap, genus_cap=0, **kw):
    """s_mu as a SymSeries (h-exponent 0)."""
    return SymSeries.from_schur(mu, 1, 0, cap, genus_cap, **kw)


def p_to_schur(f):
    """Schur coefficients of a series concentrated in one h-level, all
    degrees; returns {mu: MotiveExpr}."""
    levels = {a for (a, _mu) in f.coeffs}
    if len(levels) > 1:
        raise ValueError("series spans several h-levels; project first")
    h = levels.pop() if levels else 0
    out = {}
    for d in range(f.degree_cap + 1):
        out.update(f.schur_coefficients(h, d))
    return out
