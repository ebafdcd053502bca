"""Symmetric-function series: products, plethysm, Exp/Log, Delta."""

import random
from fractions import Fraction

import pytest

from g3motives.motives import MotiveExpr
from g3motives.partitions import partitions
from g3motives.symfunc import SymSeries, moebius, p_to_schur, schur_to_p

CAPS = dict(degree_cap=8, genus_cap=3)


def random_series(seed, nterms=6, hmin=1):
    rng = random.Random(seed)
    coeffs = {}
    for _ in range(nterms):
        d = rng.randint(1, 5)
        mu = []
        while d > 0:
            p = rng.randint(1, d)
            mu.append(p)
            d -= p
        a = rng.randint(hmin, 2)
        coeffs[(a, tuple(sorted(mu, reverse=True)))] = Fraction(
            rng.randint(-5, 5))
    return SymSeries(CAPS["degree_cap"], CAPS["genus_cap"], coeffs)


def test_moebius():
    assert [moebius(n) for n in range(1, 11)] == \
        [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    assert moebius(30) == -1
    assert moebius(49) == 0


def test_multiply_matches_naive():
    f = random_series(1)
    g = random_series(2)
    prod = f.multiply(g)
    naive = {}
    for (a1, m1), c1 in f.coeffs.items():
        for (a2, m2), c2 in g.coeffs.items():
            a = a1 + a2
            mu = tuple(sorted(m1 + m2, reverse=True))
            if sum(mu) <= CAPS["degree_cap"] and a <= CAPS["genus_cap"]:
                key = (a, mu)
                naive[key] = naive.get(key, MotiveExpr.zero()) + c1 * c2
    naive = {k: v for k, v in naive.items() if v}
    assert prod.coeffs == naive


def test_multiply_commutes_and_associates():
    f, g, h = random_series(3), random_series(4), random_series(5)
    assert f.multiply(g).coeffs == g.multiply(f).coeffs
    assert f.multiply(g).multiply(h).coeffs == \
        f.multiply(g.multiply(h)).coeffs


def test_exp_log_inversion():
    for seed in range(4):
        f = random_series(seed + 10)
        assert f.pleth_exp().pleth_log().coeffs == f.coeffs


def test_log_exp_of_sum_is_additive():
    f, g = random_series(20), random_series(21)
    lhs = (f + g).pleth_exp()
    rhs = f.pleth_exp().multiply(g.pleth_exp())
    assert lhs.coeffs == rhs.coeffs


def test_exp_requires_positive_terms():
    bad = SymSeries(4, 2, {(0, ()): Fraction(1)})
    with pytest.raises(ValueError):
        bad.pleth_exp()


def test_plethysm_associativity_sample():
    # (f o g) o h == f o (g o h) on small positive series
    f = SymSeries(6, 2, {(0, (1,)): 1, (0, (2,)): Fraction(1, 2)})
    g = SymSeries(6, 2, {(0, (1,)): 2, (1, (1, 1)): 1})
    h = SymSeries(6, 2, {(0, (1,)): 1, (0, (1, 1)): 1})
    assert f.plethysm(g).plethysm(h).coeffs == \
        f.plethysm(g.plethysm(h)).coeffs


def test_schur_powersum_roundtrip():
    for n in range(1, 6):
        for mu in partitions(n):
            f = schur_to_p(mu, 8)
            back = p_to_schur(f)
            assert back == {mu: MotiveExpr.one()}


def test_delta_preserves_weight_grading():
    # deg + 2h is invariant under Delta
    f = SymSeries(8, 4, {(0, (2, 2)): 1, (1, (4, 2)): 1, (0, (6,)): 1})
    d = f.delta(Fraction(1, 2), Fraction(1))
    for (a, mu) in d.coeffs:
        assert sum(mu) + 2 * a in {sum(m) + 2 * b for (b, m) in f.coeffs}


def test_delta_second_derivative_coefficient():
    # Delta(p_1^2) at alpha: alpha * 1 * 2 * h^1
    f = SymSeries(4, 2, {(0, (1, 1)): 1})
    d = f.delta(Fraction(1, 2), Fraction(1))
    assert d.coeffs == {(1, ()): MotiveExpr.one()}


def test_delta_folding_term():
    # Delta(p_2) at beta = 1: h^1 * 1
    f = SymSeries(4, 2, {(0, (2,)): 1})
    d = f.delta(Fraction(1, 2), Fraction(1))
    assert d.coeffs == {(1, ()): MotiveExpr.one()}
