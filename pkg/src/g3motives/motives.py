"""The motive ring: 11 generators with Tate twists.

A MotiveExpr is a linear combination of basis motives L^k * phi_j, stored
as {(k, j): coefficient}.  Coefficients are exact rationals internally
(plethystic bookkeeping introduces denominators that cancel in the end);
integrality is asserted at API boundaries via ``assert_integral``.

Generator numbering (normative for all file formats), in the order of the
dimension/weight tables (1,2,2,2,2,4,2,4,4,4,3) / (0,11,15,17,19,19,21,21,21,21,22):

    1: 1         2: S[12]     3: S[16]    4: S[18]     5: S[20]
    6: S[6,8]    7: S[22]     8: S[4,10]  9: S[8,8]   10: S[12,6]
   11: Sym2S[12]
"""

import json
import os
import re
from fractions import Fraction
from functools import lru_cache

from . import qexp
from .errors import (AdamsOutOfScope, EmptyExpr, MissingData, OutOfModel,
                     UnknownLift, UnsupportedPrimePower, UnsupportedProduct,
                     ValidationError)

GEN_NAMES = ("1", "S[12]", "S[16]", "S[18]", "S[20]", "S[6,8]", "S[22]",
             "S[4,10]", "S[8,8]", "S[12,6]", "Sym2S[12]")
GEN_DIMS = (1, 2, 2, 2, 2, 4, 2, 4, 4, 4, 3)
GEN_WEIGHTS = (0, 11, 15, 17, 19, 19, 21, 21, 21, 21, 22)
GEN_HT = ((0,), (0, 11), (0, 15), (0, 17), (0, 19), (0, 6, 13, 19),
          (0, 21), (0, 8, 13, 21), (0, 6, 15, 21), (0, 4, 17, 21),
          (0, 11, 22))

N_GENS = 11
_NAME_TO_J = {name: j + 1 for j, name in enumerate(GEN_NAMES)}

PRIMES = qexp.PRIMES
PRIME_POWERS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25)

# elliptic generators whose char polys come from 1-dim spaces of cusp forms
_ELLIPTIC = {2: 12, 3: 16, 4: 18, 5: 20, 7: 22}  # j -> modular weight


def gen_name(j):
    return GEN_NAMES[j - 1]


def gen_dim(j):
    return GEN_DIMS[j - 1]


def gen_weight(j):
    return GEN_WEIGHTS[j - 1]


def gen_ht(j):
    return GEN_HT[j - 1]


# ---------------------------------------------------------------------------
# Frobenius data


def _check_functional_equation(coeffs, p, w):
    """Self-duality: roots pair (alpha, p^w/alpha), i.e.
    c_{d-i} = c_i * p^(w(d-2i)/2) for all i."""
    d = len(coeffs) - 1
    sign = None  # x^d f(p^w/x) = sign * p^(wd/2) f(x); odd degree may flip
    for i in range(d // 2 + 1):
        ex2 = w * (d - 2 * i)
        if ex2 % 2:
            # can only pair with the mirror index; both must vanish
            if coeffs[i] != 0 or coeffs[d - i] != 0:
                return False
            continue
        lhs, rhs = coeffs[d - i], coeffs[i] * p ** (ex2 // 2)
        if lhs == rhs == 0:
            continue
        s = 1 if lhs == rhs else (-1 if lhs == -rhs else 0)
        if s == 0 or (sign is not None and s != sign):
            return False
        sign = s
    return True


class FrobData:
    """Per-generator Frobenius data: full char polys per prime where known,
    bare traces per prime otherwise (ingested partial data)."""

    def __init__(self, charpolys, traces):
        self.charpolys = charpolys  # {p: tuple coeffs, descending powers}
        self.traces = traces        # {p: int}; only consulted without charpoly

    def power_sum(self, p, r):
        if p in self.charpolys:
            return _newton_power_sum(self.charpolys[p], r)
        if r == 1 and p in self.traces:
            return self.traces[p]
        raise MissingData(("frobenius", p, r))


def _newton_power_sum(coeffs, r):
    """r-th power sum of the roots of a monic integer polynomial."""
    d = len(coeffs) - 1
    c = list(coeffs[1:]) + [0] * max(0, r - d)
    p = []
    for m in range(1, r + 1):
        s = -m * c[m - 1]
        for i in range(1, m):
            s -= c[i - 1] * p[m - 1 - i]
        p.append(s)
    return p[r - 1]


def builtin_frob_table():
    """Frobenius data recomputed from q-expansions (the build-time oracle).

    Char polys for 1, the five elliptic generators and Sym2S[12]; printed
    literature traces for S[12,6]; nothing for the other Siegel generators.
    """
    table = {1: FrobData({p: (1, -1) for p in PRIMES}, {})}
    for j, k in _ELLIPTIC.items():
        table[j] = FrobData({p: qexp.elliptic_charpoly(k, p) for p in PRIMES}, {})
    table[11] = FrobData({p: qexp.sym2_s12_charpoly(p) for p in PRIMES}, {})
    for j in (6, 8, 9):
        table[j] = FrobData({}, {})
    table[10] = FrobData({}, {2: -240, 3: 68040})
    return table


_frob = None


def load_motives(path=None):
    """Load and validate motives.json; falls back to the built-in table."""
    global _frob
    if path is None:
        path = os.path.join(os.path.dirname(__file__), "data", "motives.json")
    if not os.path.exists(path):
        _frob = builtin_frob_table()
        return _frob
    with open(path) as fh:
        doc = json.load(fh)
    oracle = builtin_frob_table()
    table = {}
    for entry in doc["generators"]:
        j = entry["j"]
        if gen_name(j) != entry["name"] or gen_dim(j) != entry["dim"] \
                or gen_weight(j) != entry["weight"] \
                or tuple(entry["hodge_tate"]) != gen_ht(j):
            raise ValidationError("generator table mismatch at j=%d" % j)
        charpolys = {}
        for pstr, coeffs in (entry.get("charpoly") or {}).items():
            p = int(pstr)
            coeffs = tuple(int(c) for c in coeffs)
            if len(coeffs) - 1 != gen_dim(j):
                raise ValidationError("char poly degree mismatch j=%d p=%d" % (j, p))
            if coeffs[0] != 1:
                raise ValidationError("char poly not monic j=%d p=%d" % (j, p))
            if not _check_functional_equation(coeffs, p, gen_weight(j)):
                raise ValidationError(
                    "functional equation fails j=%d p=%d" % (j, p))
            if j in oracle and p in oracle[j].charpolys \
                    and oracle[j].charpolys[p] != coeffs:
                raise ValidationError(
                    "char poly disagrees with q-expansion recomputation "
                    "j=%d p=%d" % (j, p))
            charpolys[p] = coeffs
        traces = {int(p): int(t) for p, t in (entry.get("traces") or {}).items()}
        table[j] = FrobData(charpolys, traces)
    for j in range(1, N_GENS + 1):
        if j not in table:
            raise ValidationError("generator j=%d missing from file" % j)
    _frob = table
    return _frob


def frob_table():
    global _frob
    if _frob is None:
        load_motives()
    return _frob


def split_prime_power(q):
    for p in PRIMES:
        if q % p == 0:
            r = 0
            m = q
            while m % p == 0:
                m //= p
                r += 1
            if m == 1:
                return p, r
    raise UnsupportedPrimePower(q)


# ---------------------------------------------------------------------------
# MotiveExpr


try:
    # exact rational arithmetic; mpq is drop-in for Fraction but much
    # faster in the series pipelines
    from gmpy2 import mpq as _RAT
except ImportError:  # pragma: no cover
    _RAT = Fraction

_MPQ = type(_RAT(0))


def _as_coeff(c):
    if type(c) is _MPQ:
        return c
    return _RAT(c)


class MotiveExpr:
    """Linear combination of L^k * phi_j; immutable."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for (k, j), c in (terms or {}).items():
            c = _as_coeff(c)
            if c:
                if k < 0 or not 1 <= j <= N_GENS:
                    raise ValueError("bad basis key (%r, %r)" % (k, j))
                clean[(int(k), int(j))] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms):
        """Internal: wrap an already-validated, zero-free term dict."""
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero():
        return MotiveExpr()

    @staticmethod
    def one():
        return MotiveExpr({(0, 1): 1})

    @staticmethod
    def L(k=1):
        return MotiveExpr({(k, 1): 1})

    @staticmethod
    def gen(name, twist=0):
        return MotiveExpr({(twist, _NAME_TO_J[name]): 1})

    # -- ring structure ---------------------------------------------------

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            v = out.get(key)
            v = c if v is None else v + c
            if v:
                out[key] = v
            elif key in out:
                del out[key]
        return MotiveExpr._raw(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            v = out.get(key)
            v = -c if v is None else v - c
            if v:
                out[key] = v
            elif key in out:
                del out[key]
        return MotiveExpr._raw(out)

    def __neg__(self):
        return MotiveExpr._raw({k: -c for k, c in self.terms.items()})

    def scale(self, c):
        c = _as_coeff(c)
        if not c:
            return MotiveExpr._raw({})
        return MotiveExpr._raw({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MotiveExpr):
            return self.scale(other)
        return mult(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, MotiveExpr) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return "MotiveExpr(%s)" % expr_to_str(self)

    # -- queries ----------------------------------------------------------

    def is_integral(self):
        return all(c.denominator == 1 for c in self.terms.values())

    def assert_integral(self):
        from .errors import NonIntegralCoefficient
        if not self.is_integral():
            raise NonIntegralCoefficient(expr_to_str(self))
        return self

    def is_tate(self):
        return all(j == 1 for (_, j) in self.terms)

    def coefficient(self, twist, name):
        return self.terms.get((twist, _NAME_TO_J[name]), Fraction(0))

    def dim(self):
        return sum(c * gen_dim(j) for (_, j), c in self.terms.items())

    def weight(self):
        if not self.terms:
            raise EmptyExpr("weight of the zero expression")
        return max(2 * k + gen_weight(j) for (k, j) in self.terms)

    def hodge_tate(self):
        """Multiset {k + w : w in HT(phi_j)} with multiplicity |c|."""
        out = {}
        for (k, j), c in self.terms.items():
            for w in gen_ht(j):
                out[k + w] = out.get(k + w, 0) + abs(c)
        return out

    def trace(self, q):
        return trace(self, q)


def trace(e, q):
    """Tr(F_q, e) for a prime power q <= 25."""
    if q not in PRIME_POWERS:
        raise UnsupportedPrimePower(q)
    p, r = split_prime_power(q)
    table = frob_table()
    total = Fraction(0)
    for (k, j), c in e.terms.items():
        total += c * q ** k * table[j].power_sum(p, r)
    if total.denominator != 1:
        from .errors import NonIntegral
        raise NonIntegral(expr_to_str(e))
    return int(total)


def mult(a, b):
    """Ring product.  Tate x anything distributes; S[12]*S[12] =
    Sym2S[12] + L^11; any other non-Tate pair is out of scope."""
    out = {}

    def put(k, j, c):
        if c:
            out[(k, j)] = out.get((k, j), 0) + c

    for (k1, j1), c1 in a.terms.items():
        for (k2, j2), c2 in b.terms.items():
            c = c1 * c2
            if j1 == 1:
                put(k1 + k2, j2, c)
            elif j2 == 1:
                put(k1 + k2, j1, c)
            elif j1 == 2 and j2 == 2:
                k = k1 + k2
                put(k, 11, c)       # Sym2 S[12]
                put(k + 11, 1, c)   # L^11
            else:
                raise UnsupportedProduct(
                    "%s * %s" % (gen_name(j1), gen_name(j2)))
    return MotiveExpr._raw({k: v for k, v in out.items() if v})


def adams(e, n):
    """Adams operation psi^n.  Supported: n = 1; Tate parts for any n;
    S[12]-multiples for n = 2 (psi^2 S[12] = Sym2S[12] - L^11)."""
    if n < 1:
        raise ValueError(n)
    if n == 1:
        return e
    out = {}

    def put(k, j, c):
        if c:
            out[(k, j)] = out.get((k, j), 0) + c

    for (k, j), c in e.terms.items():
        if j == 1:
            put(n * k, 1, c)
        elif j == 2 and n == 2:
            put(2 * k, 11, c)
            put(2 * k + 11, 1, -c)
        else:
            raise AdamsOutOfScope("psi^%d(%s)" % (n, gen_name(j)))
    return MotiveExpr(out)


# ---------------------------------------------------------------------------
# generator monoids


def _sorted_gens(pairs):
    return tuple(sorted(pairs, key=lambda kj: (kj[1], kj[0])))


def gens_phi(i):
    """Phi_i: generators with 2k + w(phi_j) = i exactly."""
    out = []
    for j in range(1, N_GENS + 1):
        rem = i - gen_weight(j)
        if rem >= 0 and rem % 2 == 0:
            out.append((rem // 2, j))
    return _sorted_gens(out)


def gens_phi_prime_upto(i):
    """Phi'_{<= i}: {(0,1)} plus all (k, j) with k >= 1, 2k + w <= i."""
    out = [(0, 1)]
    for j in range(1, N_GENS + 1):
        k = 1
        while 2 * k + gen_weight(j) <= i:
            out.append((k, j))
            k += 1
    return _sorted_gens(out)


def gens_psi(i):
    """Psi_i: generators with k + w(phi_j) <= i."""
    out = []
    for j in range(1, N_GENS + 1):
        for k in range(i - gen_weight(j) + 1):
            out.append((k, j))
    return _sorted_gens(out)


def weight_set(lam, g=None):
    """W_lambda: all subset sums of {lambda_g + 1, ..., lambda_1 + g}."""
    if g is None:
        g = len(lam)
    lam = tuple(lam) + (0,) * (g - len(lam))
    items = [lam[g - 1 - i] + 1 + i for i in range(g)]
    sums = {0}
    for it in items:
        sums |= {s + it for s in sums}
    return frozenset(sums)


def gens_psi_lambda(lam, g=3):
    """Psi_lambda: (k, j) with 2k + w <= g(g+1) + |lam| and every shifted
    Hodge-Tate weight k + w_j of phi_j lying in W_lambda."""
    lam = tuple(lam)
    bound = g * (g + 1) + sum(lam)
    W = weight_set(lam, g)
    out = []
    for j in range(1, N_GENS + 1):
        for k in range((bound - gen_weight(j)) // 2 + 1):
            if all(k + w in W for w in gen_ht(j)):
                out.append((k, j))
    return _sorted_gens(out)


def expand_lift(name):
    """Expansions of the reducible (lift) motives used by the pipeline."""
    if name == "S[0,10]":
        return MotiveExpr.gen("S[18]") + MotiveExpr.L(9) + MotiveExpr.L(8)
    if name == "S[0,12]":
        return MotiveExpr.gen("S[22]") + MotiveExpr.L(11) + MotiveExpr.L(10)
    if name == "S[4,0,8]":
        f = MotiveExpr.gen("S[12]") + MotiveExpr.L(6) + MotiveExpr.L(5)
        return mult(f, MotiveExpr.gen("S[12]"))
    raise UnknownLift(name)


# ---------------------------------------------------------------------------
# printing / parsing (normative expression grammar)


def basis_name(k, j):
    """Printable name of the basis motive L^k * phi_j."""
    g = gen_name(j)
    if k == 0:
        return g
    L = "L" if k == 1 else "L^%d" % k
    if j == 1:
        return L
    return "%s*%s" % (L, g)


def expr_to_str(e):
    if not e.terms:
        return "0"
    pieces = []
    for (k, j) in sorted(e.terms, key=lambda kj: (kj[1], kj[0])):
        c = e.terms[(k, j)]
        name = basis_name(k, j)
        mag = abs(c)
        if name == "1":
            body = str(mag)
        elif mag == 1:
            body = name
        else:
            body = "%s*%s" % (mag, name)
        pieces.append(("- " if c < 0 else "+ ") + body)
    s = " ".join(pieces)
    if s.startswith("+ "):
        s = s[2:]
    elif s.startswith("- "):
        s = "-" + s[2:]
    return s


_TOKEN = re.compile(r"\s*(\(|\)|\+|-|\*|L\^\d+|L\b|Sym2S\[12\]|"
                    r"S\[\d+(?:,\d+)?\]|\d+/\d+|\d+)")


def _tokenize(s):
    pos = 0
    out = []
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            if s[pos:].strip():
                raise ValueError("cannot tokenize %r" % s[pos:])
            break
        out.append(m.group(1))
        pos = m.end()
    return out


def expr_from_str(s):
    """Parse the normative expression grammar (sums of products of an
    integer, L-powers and at most one generator; parenthesized sums allowed)."""
    tokens = _tokenize(s)
    pos = [0]

    def peek():
        return tokens[pos[0]] if pos[0] < len(tokens) else None

    def take():
        t = peek()
        pos[0] += 1
        return t

    def parse_sum():
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take() == "-" else 1
        total = parse_term().scale(sign)
        while peek() in ("+", "-"):
            sign = -1 if take() == "-" else 1
            total = total + parse_term().scale(sign)
        return total

    def parse_term():
        out = parse_factor()
        while peek() == "*":
            take()
            out = mult(out, parse_factor())
        return out

    def parse_factor():
        t = take()
        if t is None:
            raise ValueError("unexpected end of expression")
        if t == "(":
            inner = parse_sum()
            if take() != ")":
                raise ValueError("unbalanced parentheses")
            return inner
        if t == "L":
            return MotiveExpr.L(1)
        if t.startswith("L^"):
            return MotiveExpr.L(int(t[2:]))
        if t in _NAME_TO_J:
            return MotiveExpr.gen(t)
        if "/" in t:
            return MotiveExpr.one().scale(Fraction(t))
        return MotiveExpr.one().scale(int(t))

    out = parse_sum()
    if pos[0] != len(tokens):
        raise ValueError("trailing tokens in %r" % s)
    return out
