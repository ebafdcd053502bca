"""Boundary strata of M-bar_{g,n}: two independent engines.

The direct engine sums, over isomorphism classes of non-trivial stable
graphs, the S_n-equivariant class of the S_n-orbit of each stratum.  For
an automorphism sigma of the leg-unlabeled graph, a sigma-orbit of
vertices of size m with representative v contributes

    sum_{rho_L |- legs(v)} (1/z_{rho_L}) *
        psi^m( sum_mu e_mu(M_{g(v),n(v)}) * chi^mu(rho_half u rho_L) ) *
        prod p_{m * (parts of rho_L)}

where rho_half is the cycle type of sigma^m on the half-edges at v; the
average over the graph automorphism group (leg bijections already folded
into the 1/z factors) gives the class in power-sum coordinates.  The
trivial graph reproduces the open class (Frobenius characteristic
identity), which fixes the normalization.

The generating-function engine forms Ch(V) = sum h^{g'-1} e_{c,mu} s_mu
over all smaller slots and evaluates Log(Exp(Delta) Exp(Ch)); since the
(g,n) slot is omitted from the input, the (h^{g-1}, degree-n) slice of
the output is exactly the boundary class.
"""

import hashlib
import json
import os
from fractions import Fraction
from functools import lru_cache

from .errors import MissingData
from .graphs import (StableGraph, UGraph, graph_automorphisms, stable_graphs,
                     stable_ugraphs)
from .motives import MotiveExpr, adams, expr_from_str, expr_to_str
from .partitions import character, cycle_type, partitions, zee
from .symfunc import SymSeries
from . import lowgenus

DELTA_ALPHA = Fraction(1, 2)
DELTA_BETA = Fraction(1)


def default_provider(gv, nv):
    """Open-moduli classes from the closed genus <= 2 formulas."""
    if gv == 0:
        return lowgenus.ec_m0n(nv)
    if gv == 1:
        return lowgenus.ec_m1n(nv)
    if gv == 2:
        return lowgenus.ec_m2n(nv)
    raise MissingData(("open class", gv, nv))


def layered_provider(overrides, base=default_provider):
    """Provider drawing from `overrides` {(g,n): EquivariantEC} first."""
    def provider(gv, nv):
        if (gv, nv) in overrides:
            return overrides[(gv, nv)]
        return base(gv, nv)
    return provider


# ---------------------------------------------------------------------------
# direct engine


def _half_edges_at(U, v):
    out = []
    for i, (a, b) in enumerate(U.edges):
        if a == v:
            out.append((i, 0))
        if b == v:
            out.append((i, 1))
    return out


def _vertex_of(U, he):
    i, side = he
    return U.edges[i][side]


def _orbit_class(U, provider):
    """S_n-equivariant class of the S_n-orbit of the stratum M_Gamma, in
    power-sum coordinates: {rho |- n: MotiveExpr} (coefficients of p_rho)."""
    k = U.n_vertices()
    auts = graph_automorphisms(U)
    total = {}
    for perm, hmap in auts:
        seen = set()
        orbits = []
        for v in range(k):
            if v in seen:
                continue
            orb = [v]
            w = perm[v]
            while w != v:
                orb.append(w)
                seen.add(w)
                w = perm[w]
            seen.add(v)
            orbits.append(orb)
        term = {(): MotiveExpr.one()}
        for orb in orbits:
            m = len(orb)
            v = min(orb)
            hes = _half_edges_at(U, v)
            # sigma^m restricted to the half-edges at v
            def pow_m(he):
                for _ in range(m):
                    he = hmap[he]
                return he
            rho_half = cycle_type({he: pow_m(he) for he in hes}, hes)
            lv = U.legcounts[v]
            nv = lv + len(hes)
            F = provider(U.genera[v], nv)
            factor = {}  # rho_L-output -> MotiveExpr
            for rho_l in partitions(lv):
                combined = tuple(sorted(rho_half + rho_l, reverse=True))
                scal = MotiveExpr.zero()
                for mu, e in F.items():
                    ch = character(mu, combined)
                    if ch:
                        scal = scal + e.scale(ch)
                if m > 1:
                    scal = adams(scal, m)
                scal = scal.scale(Fraction(1, zee(rho_l)))
                if scal:
                    out_mono = tuple(sorted((m * p for p in rho_l),
                                            reverse=True))
                    factor[out_mono] = factor.get(out_mono,
                                                  MotiveExpr.zero()) + scal
            new_term = {}
            for r1, c1 in term.items():
                for r2, c2 in factor.items():
                    r = tuple(sorted(r1 + r2, reverse=True))
                    cur = new_term.get(r, MotiveExpr.zero())
                    new_term[r] = cur + c1 * c2
            term = new_term
            if not term:
                break
        for r, c in term.items():
            cur = total.get(r, MotiveExpr.zero())
            total[r] = cur + c
    inv = Fraction(1, len(auts))
    return {r: c.scale(inv) for r, c in total.items() if c}


def _p_to_equivariant(pcoeffs, n):
    out = {}
    for mu in partitions(n):
        tot = MotiveExpr.zero()
        for rho, c in pcoeffs.items():
            ch = character(mu, rho)
            if ch:
                tot = tot + c.scale(ch)
        if tot:
            out[mu] = tot
    return out


@lru_cache(maxsize=None)
def _labeled_orbit_count(ukey, g, n):
    """How many labeled graphs in stable_graphs(g, n) share this
    unlabeled class."""
    count = 0
    for G in stable_graphs(g, n):
        U = UGraph(G.genera, [len(l) for l in G.legs], G.edges)
        from .graphs import _canonical
        if _canonical(U.genera, U.legcounts, list(U.edges)).key() == ukey:
            count += 1
    return count


def ec_stratum(G, provider=default_provider):
    """S_n-equivariant class attached to the labeled stratum: the class
    of its S_n-orbit divided by the orbit size, so that summing over all
    labeled graphs gives the boundary."""
    from .graphs import _canonical
    U = _canonical(G.genera, [len(l) for l in G.legs], list(G.edges))
    g = U.genus()
    n = U.n_markings()
    pc = _orbit_class(U, provider)
    cls = _p_to_equivariant(pc, n)
    N = _labeled_orbit_count(U.key(), g, n)
    return {mu: c.scale(Fraction(1, N)) for mu, c in cls.items()}


def boundary_direct(g, n, provider=default_provider):
    """Sum of the classes of all non-trivial boundary strata."""
    total = {}
    for U in stable_ugraphs(g, n):
        if not U.edges:
            continue  # trivial graph: the open part, not boundary
        for r, c in _orbit_class(U, provider).items():
            cur = total.get(r, MotiveExpr.zero())
            total[r] = cur + c
    cls = _p_to_equivariant({r: c for r, c in total.items() if c}, n)
    for c in cls.values():
        c.assert_integral()
    return cls


# ---------------------------------------------------------------------------
# generating-function engine


def boundary_gk(g, n, provider=default_provider,
                alpha=DELTA_ALPHA, beta=DELTA_BETA):
    """Boundary class via Log(Exp(Delta) Exp(Ch(V))) with all slots of
    weight n' + 2g' - 2 <= n + 2g - 2 except (g, n) itself."""
    wcap = n + 2 * g - 2
    dcap = 3 * wcap
    # Disconnected terms must be cancellable by Log: a component can sit
    # above the target h-level g-1 by one unit per genus-0 component
    # (h = -1, degree >= 3), so allow n//3 extra levels.  The lower bound
    # 0 keeps the Exp/Log constant term.
    gcap = max(g - 1 + n // 3, 0)
    caps = dict(weight_cap=wcap, floor3=True)
    ch = SymSeries(dcap, gcap, **caps)
    for gv in range(g + 1):
        nmax = wcap - (2 * gv - 2)
        for nv in range(max(1, 3 - 2 * gv), nmax + 1):
            # nv = 0 slots carry no p-variables, so Delta can never attach
            # them to anything: they only enter disconnected products that
            # Log cancels, and are skipped to avoid spurious provider calls
            if (gv, nv) == (g, n) or 2 * gv - 2 + nv <= 0:
                continue
            F = provider(gv, nv)
            for mu, e in F.items():
                ch = ch + SymSeries.from_schur(mu, e, gv - 1, dcap, gcap,
                                               **caps)
    series = ch.pleth_exp().exp_delta(alpha, beta).pleth_log()
    cls = series.schur_coefficients(g - 1, n)
    for c in cls.values():
        c.assert_integral()
    return cls


# ---------------------------------------------------------------------------
# disk cache for boundary classes

_CACHE_VERSION = 1


def _cache_dir():
    base = os.environ.get("G3MOTIVES_CACHE")
    if base is None:
        base = os.path.join(os.path.expanduser("~"), ".cache", "g3motives")
    os.makedirs(base, exist_ok=True)
    return base


def _data_hashes():
    out = {}
    data_dir = os.path.join(os.path.dirname(__file__), "data")
    for name in sorted(os.listdir(data_dir)):
        path = os.path.join(data_dir, name)
        if os.path.isfile(path):
            with open(path, "rb") as fh:
                out[name] = hashlib.sha256(fh.read()).hexdigest()
    return out


def boundary_cached(g, n, provider=None, engine="gk"):
    """Boundary class with a disk cache keyed by (g, n, engine) and the
    hashes of the data files it depends on.  Only default-provider runs
    are cached (injected providers bypass the cache)."""
    if provider is not None:
        fn = boundary_gk if engine == "gk" else boundary_direct
        return fn(g, n, provider)
    path = os.path.join(_cache_dir(), "boundary_%d_%d_%s.json" % (g, n, engine))
    hashes = _data_hashes()
    if os.path.exists(path):
        with open(path) as fh:
            blob = json.load(fh)
        if blob.get("version") == _CACHE_VERSION and blob.get("hashes") == hashes:
            return {tuple(int(x) for x in mu.split(",") if x): expr_from_str(s)
                    for mu, s in blob["classes"].items()}
    fn = boundary_gk if engine == "gk" else boundary_direct
    cls = fn(g, n, default_provider)
    blob = {"version": _CACHE_VERSION, "hashes": hashes,
            "classes": {",".join(str(x) for x in mu): expr_to_str(c)
                        for mu, c in cls.items()}}
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(blob, fh)
    os.replace(tmp, path)
    return cls
