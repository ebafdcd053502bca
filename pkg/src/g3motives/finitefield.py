"""Small finite fields F_q, q <= 25, as integer-indexed tables.

Elements are integers 0..q-1, read as base-p digit vectors over a fixed
irreducible polynomial.  Prime fields use plain modular arithmetic; the
table representation serves the vectorized counting code (numpy gathers)
and the non-prime fields.
"""

from functools import lru_cache

PRIME_POWERS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25)


def factor_prime_power(q):
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23):
        if q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            if m != 1:
                raise ValueError("not a prime power: %d" % q)
            return p, k
    raise ValueError("not a prime power: %d" % q)


def _poly_mulmod(a, b, mod, p):
    """Product of digit-list polynomials reduced modulo `mod` (monic)."""
    deg = len(mod) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    for i in range(len(out) - 1, deg - 1, -1):
        c = out[i]
        if c:
            for j in range(deg + 1):
                out[i - deg + j] = (out[i - deg + j] - c * mod[j]) % p
    return out[:deg] + [0] * (deg - len(out[:deg]))


@lru_cache(maxsize=None)
def _irreducible(p, k):
    """Lexicographically least monic irreducible of degree k over F_p,
    as coefficient list (constant first, monic top)."""
    if k == 1:
        return (0, 1)

    def is_irred(coeffs):
        # no roots in F_p
        for x in range(p):
            acc = 0
            for c in reversed(coeffs):
                acc = (acc * x + c) % p
            if acc == 0:
                return False
        if k <= 3:
            return True
        # k == 4: exclude products of two irreducible quadratics
        for b1 in range(p):
            for c1 in range(p):
                for b2 in range(p):
                    for c2 in range(p):
                        prod = [0] * 5
                        f1 = (c1, b1, 1)
                        f2 = (c2, b2, 1)
                        for i, x in enumerate(f1):
                            for j, y in enumerate(f2):
                                prod[i + j] = (prod[i + j] + x * y) % p
                        if tuple(prod) == tuple(coeffs):
                            return False
        return True

    for code in range(p ** k):
        digits = []
        m = code
        for _ in range(k):
            digits.append(m % p)
            m //= p
        coeffs = tuple(digits) + (1,)
        if is_irred(coeffs):
            return coeffs
    raise AssertionError


class Field:
    """F_q with elements 0..q-1 (base-p digits, constant digit first)."""

    def __init__(self, q):
        self.q = q
        self.p, self.k = factor_prime_power(q)
        self.mod = _irreducible(self.p, self.k)
        self._inv = None
        self._chi = None

    def _digits(self, a):
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _undigits(self, d):
        out = 0
        for c in reversed(d):
            out = out * self.p + c
        return out

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        da, db = self._digits(a), self._digits(b)
        return self._undigits([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a):
        if self.k == 1:
            return (-a) % self.p
        return self._undigits([(-x) % self.p for x in self._digits(a)])

    def mul(self, a, b):
        if self.k == 1:
            return (a * b) % self.p
        d = _poly_mulmod(self._digits(a), self._digits(b), list(self.mod),
                         self.p)
        return self._undigits(d)

    def pow(self, a, n):
        out = 1
        while n:
            if n & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            n >>= 1
        return out

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError
        return self.pow(a, self.q - 2)

    def elements(self):
        return range(self.q)

    # -- tables (numpy) ---------------------------------------------------

    def tables(self):
        """(ADD, MUL) as q x q numpy int16 arrays."""
        import numpy as np
        ADD = np.zeros((self.q, self.q), dtype=np.int16)
        MUL = np.zeros((self.q, self.q), dtype=np.int16)
        for a in range(self.q):
            for b in range(self.q):
                ADD[a, b] = self.add(a, b)
                MUL[a, b] = self.mul(a, b)
        return ADD, MUL

    def chi(self):
        """Quadratic character as a length-q list (0 at 0); odd q only."""
        if self._chi is None:
            if self.q % 2 == 0:
                raise ValueError("quadratic character needs odd q")
            ch = [0] * self.q
            for a in range(1, self.q):
                ch[a] = 1 if self.pow(a, (self.q - 1) // 2) == 1 else -1
            self._chi = ch
        return self._chi

    def frobenius(self, a):
        return self.pow(a, self.p)


@lru_cache(maxsize=None)
def field(q):
    return Field(q)
