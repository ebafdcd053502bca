"""Exact linear interpolation of motivic Euler characteristics.

This module reconstructs classes in the motive monoid from a handful of
integer invariants: the integer Euler characteristic and Frobenius traces
at small prime powers.  Two ansatz families are supported:

* ``a3``: local systems on the moduli of principally polarized abelian
  threefolds.  The class is an integer combination of Tate twists
  ``L^k phi_j`` drawn from the weight-graded generator monoid attached to
  the highest weight (``gens_psi_lambda``).

* ``m3bar``: S_n-equivariant compactified genus-3 classes.  Purity and
  Poincare duality force the shape

      sum_{2k+w<6+n} c_{k,j} (L^k + L^{6+n-k-w}) phi_j
        + sum_{2k+w=6+n} c_{k,j} L^k phi_j

  with k >= 1 except for the constant generator; the coefficient of 1 is
  1 for the trivial isotypic component and 0 otherwise, and the
  coefficient of L is the known second-cohomology multiplicity
  (``h2_equivariant``).

Relations are linear in the unknown coefficients: one Euler-characteristic
row followed by one trace row per available prime power, in ascending
order.  ``solve`` performs exact Gaussian elimination on the first square
block and verifies every remaining relation has zero residual; solutions
must be integral.  Rows are never reordered beyond that canonical order;
a singular leading block is reported loudly rather than repaired.
"""

import csv
import os
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (MissingData, NonIntegralSolution, ResidualNonzero,
                     SingularSystem, UnsupportedPrimePower)
from .motives import (PRIME_POWERS, MotiveExpr, gen_dim, gen_weight,
                      gens_phi_prime_upto, gens_psi_lambda)
from .partitions import character, partitions, zee

def _frac(x):
    """Exact rational coercion that also accepts gmpy2.mpq values."""
    if isinstance(x, Fraction):
        return x
    return Fraction(int(x.numerator), int(x.denominator)) \
        if hasattr(x, "numerator") else Fraction(x)


# ---------------------------------------------------------------------------
# second cohomology of the compactified genus-3 spaces


def _h_product_ppoly(s, n):
    """Power-sum expansion of h_s * h_{n-s} (the permutation character on
    s-element subsets of an n-element set)."""
    out = {}
    for r1 in partitions(s):
        c1 = Fraction(1, zee(r1))
        for r2 in partitions(n - s):
            rho = tuple(sorted(r1 + r2, reverse=True))
            out[rho] = out.get(rho, Fraction(0)) + c1 * Fraction(1, zee(r2))
    return out


def h2_equivariant(g, n):
    """Schur multiplicities of H^2 of the compactified moduli space.

    The classes are: kappa_1 and the irreducible boundary divisor (one
    trivial representation each), the n psi-classes (permutation
    representation on marked points), and the boundary divisors
    delta_{h,S} indexed by a subcurve genus h and marking subset S up to
    the complementarity (h, S) ~ (g-h, S^c).  For g = 3 the representative
    genera are h in {0, 1}; h = 0 requires |S| >= 2 for stability and
    h = 1 allows every subset.  Each family of divisors with fixed (h,|S|)
    carries the permutation representation on |S|-subsets.

    Returns {mu: multiplicity} over partitions mu of n (zero entries
    omitted); the total dimension is 2^(n+1) + 1.
    """
    if g != 3:
        raise ValueError("h2_equivariant implemented for genus 3 only")
    if n == 0:
        return {(): 3}
    total = {}

    def add(d, mult=1):
        for rho, c in d.items():
            total[rho] = total.get(rho, Fraction(0)) + mult * c

    add(_h_product_ppoly(n, n), 2)        # kappa_1 and delta_irr
    add(_h_product_ppoly(n - 1, n))       # psi-classes
    for s in range(2, n + 1):             # delta_{0,S}, |S| >= 2
        add(_h_product_ppoly(s, n))
    for s in range(0, n + 1):             # delta_{1,S}
        add(_h_product_ppoly(s, n))

    out = {}
    for mu in partitions(n):
        m = sum(c * character(mu, rho) for rho, c in total.items())
        if m.denominator != 1:
            raise NonIntegralSolution("h2 multiplicity %s for %r" % (m, mu))
        if m:
            out[mu] = int(m)
    return out


# ---------------------------------------------------------------------------
# ansatz


@dataclass(frozen=True)
class Ansatz:
    """A linear model for a motive class.

    ``generators`` are the unknown basis positions (twist, generator) in
    canonical order; ``fixed`` holds positions whose coefficient is known
    in advance.  For the compactified family ``top`` is the total weight
    6 + n and every below-middle position implicitly carries its Poincare
    mirror (top - k - w, j).
    """
    kind: str                      # "a3" or "m3bar"
    label: tuple
    generators: tuple              # unknown (k, j) positions
    fixed: tuple = ()              # ((k, j), coefficient) pairs
    top: int = None                # middle weight marker (m3bar only)

    def basis_expr(self, kj):
        """The motive contributed by a unit coefficient at position kj."""
        k, j = kj
        if self.kind == "a3":
            return MotiveExpr({(k, j): 1})
        mirror = self.top - k - gen_weight(j)
        if 2 * k + gen_weight(j) == self.top:
            return MotiveExpr({(k, j): 1})
        return MotiveExpr({(k, j): 1, (mirror, j): 1})

    def assemble(self, coeffs):
        """Build the full MotiveExpr from unknown coefficients."""
        total = MotiveExpr.zero()
        for kj, c in zip(self.generators, coeffs):
            if c:
                total = total + self.basis_expr(kj).scale(c)
        for kj, c in self.fixed:
            if c:
                total = total + self.basis_expr(kj).scale(c)
        return total


def ansatz_a3(lam):
    """Ansatz for e_c of the abelian-threefold moduli with highest weight
    lam: all monoid generators attached to lam, no symmetry constraint."""
    lam = tuple(lam)
    return Ansatz("a3", lam, tuple(gens_psi_lambda(lam, g=3)))


def ansatz_m3bar(n, mu):
    """Ansatz for the mu-isotypic compactified genus-3 class with n
    marked points.  Generators: twists L^k phi_j with k >= 1 and
    2k + w <= 6 + n, plus the constant.  The coefficients of 1 and L are
    fixed (H^0 and the tautological H^2)."""
    mu = tuple(mu)
    if sum(mu) != n:
        raise ValueError("mu must be a partition of n")
    top = 6 + n
    trivial = (n,) if n else ()
    fixed = {(0, 1): 1 if mu == trivial else 0,
             (1, 1): h2_equivariant(3, n).get(mu, 0)}
    gens = tuple(kj for kj in gens_phi_prime_upto(top) if kj not in fixed)
    return Ansatz("m3bar", (n, mu), gens,
                  tuple(sorted(fixed.items())), top)


# ---------------------------------------------------------------------------
# relation systems


@dataclass
class RelationSystem:
    """Ordered exact linear relations: one optional Euler-characteristic
    row followed by trace rows in ascending q.  Each row is
    (tag, coefficient vector over the ansatz unknowns, right-hand side
    with fixed contributions already subtracted)."""
    rows: list = field(default_factory=list)

    def add(self, tag, coeffs, rhs):
        self.rows.append((tag, tuple(_frac(c) for c in coeffs),
                          _frac(rhs)))

    @property
    def tags(self):
        return [t for t, _, _ in self.rows]


def relations(ansatz, ec=None, traces=None):
    """Build the relation system for an ansatz.

    ``ec`` is the integer Euler characteristic of the target (or None to
    omit the row); ``traces`` maps prime powers q to the integer
    Frobenius trace of the target.  Trace rows are emitted in ascending q.
    Prime powers for which a generator trace is itself unknown are
    skipped: those relations cannot be formed honestly.
    """
    system = RelationSystem()
    basis = [ansatz.basis_expr(kj) for kj in ansatz.generators]
    fixed_basis = [(ansatz.basis_expr(kj), c) for kj, c in ansatz.fixed]
    if ec is not None:
        rhs = _frac(ec) - sum((_frac(c * b.dim())
                                for b, c in fixed_basis), Fraction(0))
        system.add("ec", [b.dim() for b in basis], rhs)
    for q in sorted(traces or {}):
        if q not in PRIME_POWERS:
            raise UnsupportedPrimePower("no Frobenius data at q=%d" % q)
        try:
            coeffs = [b.trace(q) for b in basis]
            adj = sum((_frac(c * b.trace(q)) for b, c in fixed_basis),
                      Fraction(0))
        except MissingData:
            continue
        system.add("q=%d" % q, coeffs, _frac(traces[q]) - adj)
    return system


def solve(ansatz, system):
    """Solve the relation system exactly.

    The first u rows (u = number of unknowns) are eliminated by exact
    Gaussian elimination in their given order; a singular leading block
    raises SingularSystem with the offending column.  Every remaining row
    must have zero residual (ResidualNonzero carries the row tag) and the
    solution must be integral.  Returns (MotiveExpr, diagnostics).
    """
    u = len(ansatz.generators)
    rows = system.rows
    if len(rows) < u:
        raise SingularSystem(
            "%d unknowns but only %d relations for %r"
            % (u, len(rows), ansatz.label))
    aug = [[_frac(c) for c in coeffs] + [rhs] for _, coeffs, rhs in rows]
    # eliminate on the leading square block
    for col in range(u):
        piv = next((r for r in range(col, u) if aug[r][col]), None)
        if piv is None:
            raise SingularSystem(
                "leading %dx%d block singular at column %d (%r) for %r"
                % (u, u, col, ansatz.generators[col], ansatz.label))
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(len(aug)):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [v - c * w for v, w in zip(aug[r], aug[col])]
    sol = [aug[r][u] for r in range(u)]
    for r in range(u, len(aug)):
        if aug[r][u]:
            raise ResidualNonzero(rows[r][0], aug[r][u])
    bad = [kj for kj, c in zip(ansatz.generators, sol)
           if c.denominator != 1]
    if bad:
        raise NonIntegralSolution(
            "non-integral coefficients at %r for %r" % (bad, ansatz.label))
    sol = [int(c) for c in sol]
    expr = ansatz.assemble(sol)
    diagnostics = {
        "unknowns": u,
        "rows": len(rows),
        "tags_used": system.tags[:u],
        "tags_checked": system.tags[u:],
        "coefficients": {kj: c for kj, c in zip(ansatz.generators, sol)},
    }
    return expr, diagnostics


# ---------------------------------------------------------------------------
# ingested data

_A3_FILES = {"ec": "a3_ec.csv", "traces": "a3_traces.csv"}
_M3_FILES = {"ec": "m3_ec.csv", "traces": "m3_traces.csv"}


def _parse_lam(s):
    s = s.strip()
    if not s:
        return ()
    return tuple(int(x) for x in s.split())


class DataBundle:
    """Ingested integer tables.

    * ``a3_ec[lam]`` / ``m3_ec[lam]``: integer Euler characteristics of
      the abelian-threefold local system, resp. the genus-3 local part.
    * ``a3_tr[(lam, q)]`` / ``m3_tr[(lam, q)]``: Frobenius traces.

    CSV formats: ``lambda,ec`` and ``lambda,q,trace`` with lambda written
    as space-separated parts.  Missing files yield empty tables; lookups
    raise MissingData with the exact missing key.
    """

    def __init__(self, a3_ec=None, a3_tr=None, m3_ec=None, m3_tr=None):
        self.a3_ec = dict(a3_ec or {})
        self.a3_tr = dict(a3_tr or {})
        self.m3_ec = dict(m3_ec or {})
        self.m3_tr = dict(m3_tr or {})

    @classmethod
    def from_dir(cls, path):
        bundle = cls()
        for prefix, files, ec_tab, tr_tab in (
                ("a3", _A3_FILES, bundle.a3_ec, bundle.a3_tr),
                ("m3", _M3_FILES, bundle.m3_ec, bundle.m3_tr)):
            ec_path = os.path.join(path, files["ec"])
            if os.path.exists(ec_path):
                with open(ec_path) as fh:
                    for row in csv.DictReader(fh):
                        ec_tab[_parse_lam(row["lambda"])] = int(row["ec"])
            tr_path = os.path.join(path, files["traces"])
            if os.path.exists(tr_path):
                with open(tr_path) as fh:
                    for row in csv.DictReader(fh):
                        key = (_parse_lam(row["lambda"]), int(row["q"]))
                        tr_tab[key] = int(row["trace"])
        return bundle

    def _get(self, table, key, name):
        if key not in table:
            raise MissingData((name, key))
        return table[key]

    def a3_euler(self, lam):
        return self._get(self.a3_ec, tuple(lam), "a3 ec")

    def a3_trace(self, lam, q):
        return self._get(self.a3_tr, (tuple(lam), q), "a3 trace")

    def m3_euler(self, lam):
        return self._get(self.m3_ec, tuple(lam), "m3 ec")

    def m3_trace(self, lam, q):
        return self._get(self.m3_tr, (tuple(lam), q), "m3 trace")

    def a3_qs(self, lam):
        return sorted(q for (l, q) in self.a3_tr if l == tuple(lam))

    def m3_qs(self, lam):
        return sorted(q for (l, q) in self.m3_tr if l == tuple(lam))


# ---------------------------------------------------------------------------
# stratification helpers (abelian threefolds)


def a3_complement(lam):
    """e_c of the complement of the Jacobian locus, with coefficients in
    V_lam: the product stratum (genus-2 Jacobians) x (elliptic curves)
    plus the locus of products of three elliptic curves.

    The restriction of V_lam to the rank-(2+1) product is computed by
    symplectic branching; odd factors contribute zero since every
    genus <= 2 part is invariant under the hyperelliptic involution.
    """
    from . import lowgenus
    from .leray import branch
    lam = tuple(lam)
    total = lowgenus.ec_a1_sym3(lam)
    for lam2, lam1, twist, mult in branch(lam, (2, 1)):
        if sum(lam2) % 2 or sum(lam1) % 2:
            continue
        a = lam1[0] if lam1 else 0
        piece = lowgenus.ec_m2_local(lam2) * lowgenus.ec_a1(a)
        total = total + (piece * MotiveExpr({(twist, 1): 1})).scale(mult)
    return total


def a3_from_m3(lam, m3_class):
    """Assemble e_c(A_3, V_lam) from the Jacobian-locus class.

    For odd |lam| the Jacobian stratum contributes zero: the generic
    automorphism -1 of a threefold acts by (-1)^{|lam|} on V_lam, so only
    the even part of the genus-3 class descends.
    """
    lam = tuple(lam)
    total = a3_complement(lam)
    if sum(lam) % 2 == 0:
        total = total + m3_class
    return total


def m3_local_from_a3(lam, a3_class):
    """Invert a3_from_m3 for even |lam|: e_c of the genus-3 local part is
    the abelian class minus the product strata."""
    lam = tuple(lam)
    if sum(lam) % 2:
        raise ValueError("Jacobian stratum invisible for odd |lam|")
    return a3_class - a3_complement(lam)


# ---------------------------------------------------------------------------
# pipelines


def pipeline_a3(lam, data, qs=None):
    """Solve e_c(A_3, V_lam) from ingested integer data.

    The Euler characteristic and trace right-hand sides come from the a3
    tables when present; otherwise they are assembled from the m3 tables
    and the product-stratum closed forms.  Returns (MotiveExpr,
    diagnostics).
    """
    lam = tuple(lam)
    ansatz = ansatz_a3(lam)
    comp = a3_complement(lam)
    even = sum(lam) % 2 == 0

    try:
        ec = data.a3_euler(lam)
    except MissingData:
        ec = comp.dim() + (data.m3_euler(lam) if even else 0)

    traces = {}
    for q in (qs or PRIME_POWERS):
        try:
            traces[q] = data.a3_trace(lam, q)
            continue
        except MissingData:
            pass
        try:
            traces[q] = comp.trace(q) + (data.m3_trace(lam, q) if even else 0)
        except MissingData:
            continue
    system = relations(ansatz, ec=ec, traces=traces)
    return solve(ansatz, system)


def m3bar_relations(n, mu, data, boundary_mu, qs=None):
    """Relation system for one compactified isotypic component.

    ``boundary_mu`` is the mu-component of the boundary pushforward; the
    open-part right-hand sides are pointed translations of the ingested
    genus-3 local tables.
    """
    from .leray import a_coeffs
    mu = tuple(mu)
    ansatz = ansatz_m3bar(n, mu)
    acoef = a_coeffs(3, mu)

    def open_value(eval_poly, lookup):
        total = 0
        for lam, poly in acoef.items():
            val = lookup(lam)
            total += val * eval_poly(poly)
        return total

    ec = open_value(lambda poly: sum(poly.values()),
                    lambda lam: data.m3_euler(lam)) + boundary_mu.dim()
    traces = {}
    for q in (qs or PRIME_POWERS):
        try:
            tq = open_value(
                lambda poly: sum(c * q ** e for e, c in poly.items()),
                lambda lam: data.m3_trace(lam, q))
            traces[q] = tq + boundary_mu.trace(q)
        except MissingData:
            continue
    return ansatz, relations(ansatz, ec=ec, traces=traces)


def pipeline_m3(n, data, qs=None, boundary=None):
    """Solve every isotypic compactified genus-3 class up to n points.

    Proceeds by induction on the number of points m <= min(n, 13): the
    boundary of the m-pointed space only involves open genus-3 classes
    with fewer points, which are the already-solved compactified classes
    minus their boundaries.  For n = 14 the interpolation basis is one
    relation short; the missing input is supplied by the
    abelian-threefold pipeline: local classes of weight 14 are recovered
    by subtracting the product strata, lower weights by inverting the
    pointed translation, and the 14-pointed space is reassembled from the
    locals plus its boundary.

    ``boundary`` optionally overrides the boundary computation (mapping
    (g, m) -> {mu: MotiveExpr}) so synthetic end-to-end tests can avoid
    the cached stratum enumeration.  Returns {m: {mu: MotiveExpr}} of
    compactified classes together with {m: {mu: MotiveExpr}} of open
    classes.
    """
    from . import strata
    if n > 14:
        raise ValueError("model covers n <= 14")
    overrides = {}
    closed, opens = {}, {}

    def boundary_of(m):
        if boundary is not None:
            return boundary(3, m)
        return strata.boundary_cached(
            3, m, provider=strata.layered_provider(dict(overrides)))

    for m in range(min(n, 13) + 1):
        bnd = boundary_of(m)
        closed[m], opens[m] = {}, {}
        for mu in partitions(m):
            bmu = bnd.get(mu, MotiveExpr.zero())
            ansatz, system = m3bar_relations(m, mu, data, bmu, qs=qs)
            expr, _ = solve(ansatz, system)
            closed[m][mu] = expr
            opens[m][mu] = expr - bmu
        overrides[(3, m)] = opens[m]

    if n == 14:
        # recover the local tables from the solved pointed classes ...
        pointed = {mu: e for tab in opens.values() for mu, e in tab.items()}
        from .leray import local_from_pointed, pointed_from_local
        locals_ = {}
        for m in range(14):
            for lam in partitions(m):
                if len(lam) <= 3:
                    locals_[lam] = local_from_pointed(lam, 3, pointed)
        # ... close the top weight through the abelian threefolds ...
        for lam in partitions(14):
            if len(lam) <= 3:
                a3_expr, _ = pipeline_a3(lam, data, qs=qs)
                locals_[lam] = m3_local_from_a3(lam, a3_expr)
        opens[14] = pointed_from_local(
            3, 14, lambda lam: locals_.get(tuple(lam), MotiveExpr.zero()))
        overrides[(3, 14)] = opens[14]
        bnd = boundary_of(14)
        closed[14] = {mu: opens[14][mu] + bnd.get(mu, MotiveExpr.zero())
                      for mu in partitions(14)}
    return closed, opens
